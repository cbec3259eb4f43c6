#include "dalg/series.hpp"

#include <algorithm>
#include <limits>

#include "dalg/errors.hpp"

namespace dalg {

namespace {

Coeff inverse_of(std::size_t n) { return Coeff(make_rational(1, static_cast<long>(n))); }

void same_point(const Series& a, const Series& b) {
  if (a.point() != b.point()) throw DomainError("series expanded at different points");
}

// Taylor coefficients in t = x - p of a polynomial in x whose coefficients
// are free of x.
std::vector<Coeff> shift_polynomial(const BasePoly& poly, const Coeff& point, std::size_t n) {
  const auto cs = poly.coefficients_in(kXVar);
  std::vector<Coeff> out(n, Coeff(0));
  // (p + t)^j = sum_m C(j, m) p^{j-m} t^m.
  std::vector<Coeff> ppow{Coeff(1)};
  for (std::size_t j = 1; j < cs.size(); ++j) ppow.push_back(ppow.back() * point);
  for (std::size_t j = 0; j < cs.size(); ++j) {
    if (cs[j].is_zero_poly()) continue;
    const Coeff c(cs[j]);
    for (std::size_t m = 0; m <= j && m < n; ++m)
      out[m] += c * Coeff(Rational(binomial(j, m))) * ppow[j - m];
  }
  return out;
}

}  // namespace

Series::Series(std::vector<Coeff> coefficients, Coeff point) : a_(std::move(coefficients)), point_(std::move(point)) {
  if (point_.contains_var(kXVar)) throw DomainError("expansion point must be free of x");
  for (const auto& c : a_)
    if (c.contains_var(kXVar)) throw DomainError("series coefficients must be free of x");
}

Series Series::constant(const Coeff& c, std::size_t n, const Coeff& point) {
  std::vector<Coeff> a(n, Coeff(0));
  if (n > 0) a[0] = c;
  return Series(std::move(a), point);
}

Series Series::t(std::size_t n, const Coeff& point) {
  std::vector<Coeff> a(n, Coeff(0));
  if (n > 1) a[1] = Coeff(1);
  return Series(std::move(a), point);
}

Series Series::of(const Coeff& c, std::size_t n, const Coeff& point) {
  if (!c.contains_var(kXVar)) return constant(c, n, point);
  const Series num(shift_polynomial(c.numerator(), point, n), point);
  const Series den(shift_polynomial(c.denominator(), point, n), point);
  if (den.coefficients().empty() || den[0].is_zero()) throw DomainError("coefficient has a pole at the expansion point");
  return num * invert(den);
}

std::optional<std::size_t> Series::valuation() const {
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!a_[k].is_zero()) return k;
  return std::nullopt;
}

Series Series::truncated(std::size_t n) const {
  if (n >= a_.size()) return *this;
  return Series(std::vector<Coeff>(a_.begin(), a_.begin() + static_cast<std::ptrdiff_t>(n)), point_);
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& c : r.a_) c = -c;
  return r;
}

Series operator+(const Series& a, const Series& b) {
  same_point(a, b);
  const std::size_t n = std::min(a.truncation(), b.truncation());
  std::vector<Coeff> out(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = a.a_[k] + b.a_[k];
  return Series(std::move(out), a.point_);
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series operator*(const Series& a, const Series& b) {
  same_point(a, b);
  const std::size_t n = std::min(a.truncation(), b.truncation());
  std::vector<Coeff> out(n, Coeff(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (a.a_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < n; ++j)
      if (!b.a_[j].is_zero()) out[i + j] += a.a_[i] * b.a_[j];
  }
  return Series(std::move(out), a.point_);
}

Series Series::scaled(const Coeff& c) const {
  Series r = *this;
  for (auto& v : r.a_) v *= c;
  return r;
}

Series derive(const Series& a) {
  const std::size_t n = a.truncation();
  if (n == 0) return a;
  std::vector<Coeff> out(n - 1);
  for (std::size_t k = 1; k < n; ++k) out[k - 1] = a[k] * Coeff(static_cast<long>(k));
  return Series(std::move(out), a.point());
}

Series integrate(const Series& a, const Coeff& c) {
  std::vector<Coeff> out{c};
  for (std::size_t k = 0; k < a.truncation(); ++k) out.push_back(a[k] * inverse_of(k + 1));
  return Series(std::move(out), a.point());
}

Series invert(const Series& a) {
  const std::size_t n = a.truncation();
  if (n == 0) return a;
  if (a[0].is_zero()) throw DomainError("series with zero constant term is not invertible");
  const Coeff inv0 = Coeff(1) / a[0];
  std::vector<Coeff> b(n, Coeff(0));
  b[0] = inv0;
  for (std::size_t k = 1; k < n; ++k) {
    Coeff acc(0);
    for (std::size_t j = 1; j <= k; ++j)
      if (!a[j].is_zero()) acc += a[j] * b[k - j];
    b[k] = -acc * inv0;
  }
  return Series(std::move(b), a.point());
}

Series exp0(const Series& a) {
  const std::size_t n = a.truncation();
  if (n == 0) return a;
  if (!a[0].is_zero()) throw DomainError("exp0 needs a zero constant term");
  // e' = a' e gives n e_n = sum_{k=1}^n k a_k e_{n-k}.
  std::vector<Coeff> e(n, Coeff(0));
  e[0] = Coeff(1);
  for (std::size_t m = 1; m < n; ++m) {
    Coeff acc(0);
    for (std::size_t k = 1; k <= m; ++k)
      if (!a[k].is_zero()) acc += Coeff(static_cast<long>(k)) * a[k] * e[m - k];
    e[m] = acc * inverse_of(m);
  }
  return Series(std::move(e), a.point());
}

Series compose0(const Series& a, const Series& b) {
  same_point(a, b);
  const std::size_t n = std::min(a.truncation(), b.truncation());
  if (n == 0) return Series({}, a.point());
  if (!b[0].is_zero()) throw DomainError("compose0 needs a zero constant term in the inner series");
  const Series inner = b.truncated(n);
  // Horner: a_0 + b (a_1 + b (a_2 + ...)).
  Series acc = Series::constant(a[n - 1], n, a.point());
  for (std::size_t k = n - 1; k-- > 0;) acc = Series::constant(a[k], n, a.point()) + inner * acc;
  return acc;
}

Series pow(const Series& a, std::uint32_t e) {
  Series result = Series::constant(Coeff(1), a.truncation(), a.point());
  Series base = a;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Series apply_dpoly(const DPoly& p, const Witnesses& witnesses) {
  if (p.contains_var(kSVar)) throw DomainError("dehomogenize before evaluating on series");
  if (witnesses.empty()) throw DomainError("no witness series");
  const Coeff point = witnesses.begin()->second.point();
  std::size_t n = std::numeric_limits<std::size_t>::max();
  bool uses_jets = false;
  for (const auto& [f, w] : witnesses) {
    if (w.point() != point) throw DomainError("witnesses expanded at different points");
  }
  for (VarId v : p.variables()) {
    if (!is_jet_var(v)) continue;
    const JetVar j = JetVar::from_id(v);
    auto it = witnesses.find(j.family);
    if (it == witnesses.end()) throw DomainError("no witness series for " + j.family.name());
    if (it->second.truncation() <= j.order) throw DomainError("witness truncation too short for " + jet_name(v));
    n = std::min(n, it->second.truncation() - j.order);
    uses_jets = true;
  }
  if (!uses_jets) {
    n = 0;
    for (const auto& [f, w] : witnesses) n = std::max(n, w.truncation());
  }

  std::map<VarId, std::vector<Series>> powers;  // powers[v][e] = (v series)^e
  auto power = [&](VarId v, std::uint32_t e) -> const Series& {
    auto& pw = powers[v];
    if (pw.empty()) {
      const JetVar j = JetVar::from_id(v);
      Series s = witnesses.at(j.family);
      for (std::uint32_t k = 0; k < j.order; ++k) s = derive(s);
      pw.push_back(Series::constant(Coeff(1), n, point));
      pw.push_back(s.truncated(n));
    }
    while (pw.size() <= e) pw.push_back(pw.back() * pw[1]);
    return pw[e];
  };

  Series result = Series::constant(Coeff(0), n, point);
  for (const auto& t : p.terms()) {
    Series term = Series::of(t.coef, n, point);
    for (const auto& [v, e] : t.mono.factors()) term = term * power(v, e);
    result = result + term;
  }
  return result;
}

Series solve_ode_series(const DPoly& p, Family f, const std::vector<Coeff>& initial, std::size_t n,
                        const Coeff& point) {
  for (VarId v : p.variables())
    if (v == kSVar || (is_jet_var(v) && JetVar::from_id(v).family != f))
      throw DomainError("equation must involve only the jets of " + f.name());
  const std::uint32_t r = order_in(p, f);
  if (!p.contains_var(jet(f, r))) throw DomainError("equation does not involve " + f.name());
  const auto parts = p.coefficients_in(jet(f, r));
  if (parts.size() != 2) throw DomainError("equation must be linear in its top derivative");
  const DPoly& b = parts[0];
  const DPoly& a = parts[1];
  if (initial.size() != r) throw DomainError("need exactly " + std::to_string(r) + " initial values");

  if (r == 0) {
    if (!a.is_constant() || !b.is_constant()) throw DomainError("algebraic witness must be linear");
    return Series::of(-b.constant_value() / a.constant_value(), n, point);
  }

  // a_j = y^(j)(p) / j!.
  std::vector<Coeff> coeffs;
  for (std::size_t j = 0; j < r; ++j) coeffs.push_back(initial[j] / Coeff(Rational(factorial(j))));
  for (std::size_t m = r; m < n; ++m) {
    // With a_0..a_{m-1} known, the jets below order r are exact up to index
    // m - r, which fixes y^(r) at that index.
    Witnesses w{{f, Series(coeffs, point)}};
    const Series as = apply_dpoly(a, w);
    const Series bs = apply_dpoly(b, w);
    if (m == r && as[0].is_zero()) throw DomainError("leading coefficient vanishes at the expansion point");
    const Series rhs = -(bs * invert(as));
    const std::size_t idx = m - r;
    // y^(r) at index idx equals a_m * m! / idx!.
    coeffs.push_back(rhs[idx] * Coeff(Rational(factorial(idx))) / Coeff(Rational(factorial(m))));
  }
  coeffs.resize(std::min(coeffs.size(), n));
  return Series(std::move(coeffs), point);
}

Certification verify_annihilator(const DPoly& annihilator, const Witnesses& witnesses) {
  const Series residual = apply_dpoly(dehomogenize(annihilator), witnesses);
  Certification c;
  c.residual_truncation = residual.truncation();
  const auto v = residual.valuation();
  c.certified = !v;
  c.residual_valuation = v ? *v : residual.truncation();
  return c;
}

}  // namespace dalg
