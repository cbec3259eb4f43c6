#include "dalg/coeff.hpp"

#include "dalg/jet.hpp"

namespace dalg {

namespace {

std::pair<bool, std::string> format_gauss(const GaussRat& g) {
  if (g.is_real()) {
    const bool neg = sgn(g.re()) < 0;
    Rational mag = neg ? Rational(-g.re()) : g.re();
    return {neg, mag == 1 ? std::string() : mag.get_str()};
  }
  if (sgn(g.re()) == 0 && sgn(g.im()) < 0) return {true, to_string(-g)};
  return {false, to_string(g)};
}

}  // namespace

std::string format_base_poly(const BasePoly& p, const NameFn& names) {
  return format_poly(p, format_gauss, names);
}

Coeff::Coeff(const GaussRat& v) { set_gauss(v); }

Coeff::Coeff(const BasePoly& p) { set_fraction(p, BasePoly(GaussRat(1))); }

Coeff Coeff::fraction(const BasePoly& num, const BasePoly& den) {
  if (den.is_zero_poly()) throw DomainError("zero denominator");
  Coeff c;
  BasePoly g = gcd(num, den);
  if (g.is_constant()) {
    c.set_fraction(num, den);
  } else {
    c.set_fraction(divide_exact(num, g), divide_exact(den, g));
  }
  return c;
}

void Coeff::set_gauss(const GaussRat& g) {
  re_ = g.re();
  if (g.is_real()) {
    ext_.reset();
  } else {
    auto e = std::make_shared<Ext>();
    e->im = g.im();
    ext_ = std::move(e);
  }
}

// Expects gcd(num, den) = 1.
void Coeff::set_fraction(BasePoly num, BasePoly den) {
  const GaussRat lc = den.leading_coef();
  if (!(lc == GaussRat(1))) {
    const GaussRat inv = GaussRat(1) / lc;
    num = num.scaled(inv);
    den = den.scaled(inv);
  }
  if (num.is_zero_poly()) {
    re_ = 0;
    ext_.reset();
    return;
  }
  if (num.is_constant() && den.is_constant()) {
    set_gauss(num.constant_value());
    return;
  }
  auto e = std::make_shared<Ext>();
  e->is_fun = true;
  e->num = std::move(num);
  e->den = std::move(den);
  re_ = 0;
  ext_ = std::move(e);
}

GaussRat Coeff::constant() const {
  if (!ext_) return GaussRat(re_);
  if (!ext_->is_fun) return GaussRat(re_, ext_->im);
  throw DomainError("coefficient is not a constant");
}

BasePoly Coeff::numerator() const {
  if (ext_ && ext_->is_fun) return ext_->num;
  return BasePoly(constant());
}

BasePoly Coeff::denominator() const {
  if (ext_ && ext_->is_fun) return ext_->den;
  return BasePoly(GaussRat(1));
}

bool Coeff::contains_var(VarId v) const {
  if (!ext_ || !ext_->is_fun) return false;
  return ext_->num.contains_var(v) || ext_->den.contains_var(v);
}

Coeff Coeff::derivative() const {
  if (is_constant()) return Coeff();
  const VarId x = kXVar;
  const BasePoly& n = ext_->num;
  const BasePoly& d = ext_->den;
  return fraction(n.partial(x) * d - n * d.partial(x), d * d);
}

Coeff Coeff::operator-() const {
  Coeff r = *this;
  if (!ext_) {
    r.re_ = -re_;
  } else if (!ext_->is_fun) {
    r.set_gauss(-constant());
  } else {
    auto e = std::make_shared<Ext>(*ext_);
    e->num = -e->num;
    r.ext_ = std::move(e);
  }
  return r;
}

Coeff& Coeff::operator+=(const Coeff& o) {
  if (!ext_ && !o.ext_) {
    re_ += o.re_;
    return *this;
  }
  if (is_constant() && o.is_constant()) {
    set_gauss(constant() + o.constant());
    return *this;
  }
  if (o.is_zero()) return *this;
  const BasePoly n1 = numerator(), d1 = denominator();
  const BasePoly n2 = o.numerator(), d2 = o.denominator();
  if (d1 == d2) {
    *this = fraction(n1 + n2, d1);
  } else {
    *this = fraction(n1 * d2 + n2 * d1, d1 * d2);
  }
  return *this;
}

Coeff& Coeff::operator-=(const Coeff& o) {
  if (!ext_ && !o.ext_) {
    re_ -= o.re_;
    return *this;
  }
  return *this += -o;
}

Coeff& Coeff::operator*=(const Coeff& o) {
  if (!ext_ && !o.ext_) {
    re_ *= o.re_;
    return *this;
  }
  if (is_constant() && o.is_constant()) {
    set_gauss(constant() * o.constant());
    return *this;
  }
  if (is_zero() || o.is_zero()) {
    *this = Coeff();
    return *this;
  }
  BasePoly n1 = numerator(), d1 = denominator();
  BasePoly n2 = o.numerator(), d2 = o.denominator();
  const BasePoly g1 = gcd(n1, d2);
  const BasePoly g2 = gcd(n2, d1);
  if (!g1.is_constant()) {
    n1 = divide_exact(n1, g1);
    d2 = divide_exact(d2, g1);
  }
  if (!g2.is_constant()) {
    n2 = divide_exact(n2, g2);
    d1 = divide_exact(d1, g2);
  }
  set_fraction(n1 * n2, d1 * d2);
  return *this;
}

Coeff& Coeff::operator/=(const Coeff& o) {
  if (o.is_zero()) throw DomainError("division by zero coefficient");
  if (!ext_ && !o.ext_) {
    re_ /= o.re_;
    return *this;
  }
  if (is_constant() && o.is_constant()) {
    set_gauss(constant() / o.constant());
    return *this;
  }
  Coeff inv;
  inv.set_fraction(o.denominator(), o.numerator());
  return *this *= inv;
}

bool operator==(const Coeff& a, const Coeff& b) {
  if (!a.ext_ || !b.ext_) return !a.ext_ && !b.ext_ && a.re_ == b.re_;
  if (a.ext_->is_fun != b.ext_->is_fun) return false;
  if (!a.ext_->is_fun) return a.re_ == b.re_ && a.ext_->im == b.ext_->im;
  return a.ext_->num == b.ext_->num && a.ext_->den == b.ext_->den;
}

std::string Coeff::to_string(const NameFn& names) const {
  if (is_constant()) {
    auto [neg, mag] = format_gauss(constant());
    std::string s = mag.empty() ? "1" : mag;
    return neg ? "-" + s : s;
  }
  std::string num = format_base_poly(ext_->num, names);
  if (ext_->den.is_constant()) return "(" + num + ")";
  return "(" + num + ")/(" + format_base_poly(ext_->den, names) + ")";
}

}  // namespace dalg
