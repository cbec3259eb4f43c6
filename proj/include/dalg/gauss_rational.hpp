#pragma once

#include <string>

#include "dalg/rational.hpp"

namespace dalg {

/// Element a + b*i of Q(i), i^2 = -1.
class GaussRat {
 public:
  GaussRat() = default;
  GaussRat(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussRat(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussRat imaginary_unit() { return GaussRat(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }

  GaussRat conj() const { return GaussRat(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  GaussRat operator-() const { return GaussRat(-re_, -im_); }

  GaussRat& operator+=(const GaussRat& o) {
    re_ += o.re_;
    if (sgn(o.im_) != 0) im_ += o.im_;
    return *this;
  }
  GaussRat& operator-=(const GaussRat& o) {
    re_ -= o.re_;
    if (sgn(o.im_) != 0) im_ -= o.im_;
    return *this;
  }
  GaussRat& operator*=(const GaussRat& o) {
    if (is_real() && o.is_real()) {
      re_ *= o.re_;
      return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }
  GaussRat& operator/=(const GaussRat& o) {
    if (o.is_real()) {
      re_ /= o.re_;
      if (sgn(im_) != 0) im_ /= o.re_;
      return *this;
    }
    const Rational n = o.norm();
    *this *= o.conj();
    re_ /= n;
    im_ /= n;
    return *this;
  }

  friend GaussRat operator+(GaussRat a, const GaussRat& b) { return a += b; }
  friend GaussRat operator-(GaussRat a, const GaussRat& b) { return a -= b; }
  friend GaussRat operator*(GaussRat a, const GaussRat& b) { return a *= b; }
  friend GaussRat operator/(GaussRat a, const GaussRat& b) { return a /= b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_;
  Rational im_;
};

inline bool is_zero(const GaussRat& a) { return a.is_zero(); }

/// Text form accepted back by the polynomial parser: "3/2", "i", "-2*i",
/// "(1/2+3*i)".
inline std::string to_string(const GaussRat& a) {
  if (a.is_real()) return a.re().get_str();
  std::string im;
  if (a.im() == 1) {
    im = "i";
  } else if (a.im() == -1) {
    im = "-i";
  } else {
    im = a.im().get_str() + "*i";
  }
  if (sgn(a.re()) == 0) return im;
  std::string out = "(" + a.re().get_str();
  if (im[0] != '-') out += "+";
  return out + im + ")";
}

}  // namespace dalg
