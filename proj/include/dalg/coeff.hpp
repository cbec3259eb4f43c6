#pragma once

#include <functional>
#include <memory>
#include <string>

#include "dalg/gauss_rational.hpp"
#include "dalg/rational.hpp"
#include "dalg/sparse_poly.hpp"

namespace dalg {

/// Polynomials in x and the constant parameters, over Q(i).
using BasePoly = SparsePoly<GaussRat>;

/// Maps a variable id to its printed name.
using NameFn = std::function<std::string(VarId)>;

/// Element of the base field K: Q, Q(i), or a reduced fraction of
/// polynomials in x and constant parameters over Q(i).
///
/// Three internal representations share one value semantics: a bare
/// rational (the common case inside Macaulay layers), a Gaussian rational,
/// and a fraction num/den with gcd(num, den) = 1 and den monic under
/// grevlex. Constants are always stored in the cheapest representation, so
/// equality of values is equality of representations.
class Coeff {
 public:
  Coeff() = default;
  Coeff(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Coeff(Rational v) : re_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  Coeff(const GaussRat& v);  // NOLINT(google-explicit-constructor)
  Coeff(const BasePoly& p);  // NOLINT(google-explicit-constructor)

  static Coeff fraction(const BasePoly& num, const BasePoly& den);
  static Coeff variable(VarId v) { return Coeff(BasePoly::variable(v)); }
  static Coeff imaginary_unit() { return Coeff(GaussRat::imaginary_unit()); }

  bool is_zero() const { return !ext_ && sgn(re_) == 0; }
  bool is_one() const { return !ext_ && re_ == 1; }
  /// True for elements of Q.
  bool is_rational() const { return !ext_; }
  /// True for elements of Q(i) (no x, no parameters).
  bool is_constant() const { return !ext_ || !ext_->is_fun; }
  const Rational& rational() const { return re_; }
  GaussRat constant() const;

  BasePoly numerator() const;
  BasePoly denominator() const;
  bool contains_var(VarId v) const;
  /// Whether the denominator is 1.
  bool is_polynomial() const { return !ext_ || !ext_->is_fun || ext_->den.is_constant(); }

  /// Derivative with x' = 1 and parameters constant.
  Coeff derivative() const;

  Coeff operator-() const;
  Coeff& operator+=(const Coeff& o);
  Coeff& operator-=(const Coeff& o);
  Coeff& operator*=(const Coeff& o);
  Coeff& operator/=(const Coeff& o);
  friend Coeff operator+(Coeff a, const Coeff& b) { return a += b; }
  friend Coeff operator-(Coeff a, const Coeff& b) { return a -= b; }
  friend Coeff operator*(Coeff a, const Coeff& b) { return a *= b; }
  friend Coeff operator/(Coeff a, const Coeff& b) { return a /= b; }
  friend bool operator==(const Coeff& a, const Coeff& b);
  friend bool operator!=(const Coeff& a, const Coeff& b) { return !(a == b); }

  /// Parseable text, e.g. "-3/2", "(1/2+i)", "(a*x + 1)/(x)".
  std::string to_string(const NameFn& names) const;

 private:
  struct Ext {
    Rational im;  // Gaussian constant when !is_fun
    bool is_fun = false;
    BasePoly num, den;
  };

  void set_fraction(BasePoly num, BasePoly den);
  void set_gauss(const GaussRat& g);

  Rational re_;
  std::shared_ptr<const Ext> ext_;
};

inline bool is_zero(const Coeff& c) { return c.is_zero(); }

/// Formats a sparse polynomial as parseable text using the given coefficient
/// and variable printers.
template <class F, class CoefFmt>
std::string format_poly(const SparsePoly<F>& p, CoefFmt coef_fmt, const NameFn& names);

std::string format_base_poly(const BasePoly& p, const NameFn& names);

}  // namespace dalg

#include "dalg/detail/format_poly.hpp"
