#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "dalg/dpoly.hpp"

namespace dalg {

/// Truncated power series sum_{k<N} a_k (x - p)^k with exact coefficients.
/// Coefficients are field elements free of x; constant parameters are
/// allowed.
class Series {
 public:
  Series() = default;
  explicit Series(std::vector<Coeff> coefficients, Coeff point = Coeff(0));

  static Series constant(const Coeff& c, std::size_t n, const Coeff& point = Coeff(0));
  /// The variable t = x - p.
  static Series t(std::size_t n, const Coeff& point = Coeff(0));
  /// Expansion of a field element (rational function in x) around p.
  static Series of(const Coeff& c, std::size_t n, const Coeff& point = Coeff(0));

  std::size_t truncation() const { return a_.size(); }
  const Coeff& point() const { return point_; }
  const std::vector<Coeff>& coefficients() const { return a_; }
  const Coeff& operator[](std::size_t k) const { return a_.at(k); }

  /// Index of the first nonzero coefficient; nullopt when every stored
  /// coefficient is zero.
  std::optional<std::size_t> valuation() const;
  bool is_zero() const { return !valuation(); }
  Series truncated(std::size_t n) const;

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  /// Truncation min(N_a, N_b).
  friend Series operator*(const Series& a, const Series& b);
  Series scaled(const Coeff& c) const;

  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  std::vector<Coeff> a_;
  Coeff point_;
};

/// Shortens truncation by one.
Series derive(const Series& a);
/// Antiderivative with constant term c; lengthens truncation by one.
Series integrate(const Series& a, const Coeff& c = Coeff(0));
/// Needs a_0 != 0.
Series invert(const Series& a);
/// exp(a) for a_0 = 0.
Series exp0(const Series& a);
/// a(b) for b_0 = 0; truncation min(N_a, N_b).
Series compose0(const Series& a, const Series& b);
Series pow(const Series& a, std::uint32_t e);

/// Series solution of P = 0 where P is linear in its top derivative
/// y^(r): P = A * y^(r) + B, so y^(r) = -B / A. `initial` holds
/// y(p), y'(p), ..., y^(r-1)(p). Requires A(p) != 0 at the initial jets.
Series solve_ode_series(const DPoly& p, Family f, const std::vector<Coeff>& initial, std::size_t n,
                        const Coeff& point = Coeff(0));

using Witnesses = std::map<Family, Series>;

/// Substitutes the jets of the witnesses (and the expansion of every
/// coefficient) into P. Truncation: min over used jets of N_f - j.
Series apply_dpoly(const DPoly& p, const Witnesses& witnesses);

struct Certification {
  bool certified = false;
  /// Residual valuation; the residual truncation when it vanishes.
  std::size_t residual_valuation = 0;
  std::size_t residual_truncation = 0;
};

Certification verify_annihilator(const DPoly& annihilator, const Witnesses& witnesses);

}  // namespace dalg
