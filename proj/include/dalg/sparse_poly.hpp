#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dalg/errors.hpp"

namespace dalg {

using VarId = std::uint32_t;

/// Power product of variables, stored as (variable, exponent) pairs sorted
/// by increasing variable id. Exponents are strictly positive.
class Monomial {
 public:
  using Factor = std::pair<VarId, std::uint32_t>;

  Monomial() = default;

  static Monomial var(VarId v, std::uint32_t e = 1) {
    Monomial m;
    if (e > 0) {
      m.factors_.emplace_back(v, e);
      m.degree_ = e;
    }
    return m;
  }

  /// Builds from arbitrary (var, exp) pairs; merges duplicates, drops zeros.
  static Monomial from_factors(std::vector<Factor> f) {
    std::sort(f.begin(), f.end());
    Monomial m;
    for (const auto& [v, e] : f) {
      if (e == 0) continue;
      if (!m.factors_.empty() && m.factors_.back().first == v) {
        m.factors_.back().second += e;
      } else {
        m.factors_.emplace_back(v, e);
      }
      m.degree_ += e;
    }
    return m;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t degree() const { return degree_; }

  std::uint32_t degree(VarId v) const {
    for (const auto& [w, e] : factors_) {
      if (w == v) return e;
      if (w > v) break;
    }
    return 0;
  }

  template <class Pred>
  std::uint32_t degree_if(Pred pred) const {
    std::uint32_t d = 0;
    for (const auto& [w, e] : factors_)
      if (pred(w)) d += e;
    return d;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    r.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin();
    auto b = o.factors_.begin();
    while (a != factors_.end() || b != o.factors_.end()) {
      if (b == o.factors_.end() || (a != factors_.end() && a->first < b->first)) {
        r.factors_.push_back(*a++);
      } else if (a == factors_.end() || b->first < a->first) {
        r.factors_.push_back(*b++);
      } else {
        r.factors_.emplace_back(a->first, a->second + b->second);
        ++a;
        ++b;
      }
    }
    r.degree_ = degree_ + o.degree_;
    return r;
  }

  bool divides(const Monomial& o) const {
    auto b = o.factors_.begin();
    for (const auto& [v, e] : factors_) {
      while (b != o.factors_.end() && b->first < v) ++b;
      if (b == o.factors_.end() || b->first != v || b->second < e) return false;
    }
    return true;
  }

  /// Quotient o / *this style division; requires divisibility.
  Monomial operator/(const Monomial& d) const {
    Monomial r;
    auto b = d.factors_.begin();
    for (const auto& [v, e] : factors_) {
      std::uint32_t sub = 0;
      if (b != d.factors_.end() && b->first == v) {
        sub = b->second;
        ++b;
      }
      if (e > sub) r.factors_.emplace_back(v, e - sub);
    }
    r.degree_ = degree_ - d.degree_;
    return r;
  }

  /// The same monomial with variable v removed.
  Monomial without(VarId v) const {
    Monomial r;
    for (const auto& f : factors_) {
      if (f.first == v) continue;
      r.factors_.push_back(f);
      r.degree_ += f.second;
    }
    return r;
  }

  VarId max_var() const { return factors_.back().first; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<Factor> factors_;
  std::uint32_t degree_ = 0;
};

/// Graded reverse lexicographic comparison; variables with larger ids are
/// larger, so the lowest id is the "last" variable. Returns +1 if a > b.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  const auto& fa = a.factors();
  const auto& fb = b.factors();
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < fa.size() && j < fb.size()) {
    if (fa[i].first < fb[j].first) return -1;
    if (fa[i].first > fb[j].first) return 1;
    if (fa[i].second != fb[j].second) return fa[i].second < fb[j].second ? 1 : -1;
    ++i;
    ++j;
  }
  return 0;
}

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_cmp(a, b) > 0; }
};

/// Sparse multivariate polynomial over a field F, terms kept in strictly
/// decreasing grevlex order with no zero coefficients.
///
/// F must provide +, -, *, / and == together with a free `is_zero(F)`.
template <class F>
class SparsePoly {
 public:
  struct Term {
    Monomial mono;
    F coef;
    friend bool operator==(const Term& a, const Term& b) {
      return a.mono == b.mono && a.coef == b.coef;
    }
  };

  SparsePoly() = default;
  SparsePoly(F c) {  // NOLINT(google-explicit-constructor)
    if (!is_zero(c)) terms_.push_back({Monomial(), std::move(c)});
  }

  static SparsePoly variable(VarId v, std::uint32_t e = 1) { return term(Monomial::var(v, e), F(1)); }
  static SparsePoly term(Monomial m, F c) {
    SparsePoly p;
    if (!is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
    return p;
  }
  /// Sorts and merges arbitrary terms.
  static SparsePoly from_terms(std::vector<Term> ts) {
    std::map<Monomial, F, GrevlexGreater> acc;
    for (auto& t : ts) {
      auto [it, fresh] = acc.try_emplace(std::move(t.mono), t.coef);
      if (!fresh) it->second += t.coef;
    }
    return from_map(std::move(acc));
  }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero_poly() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  F constant_value() const { return terms_.empty() ? F(0) : (terms_.back().mono.is_one() ? terms_.back().coef : F(0)); }
  F constant_term() const { return constant_value(); }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const F& leading_coef() const { return terms_.front().coef; }

  std::uint32_t total_degree() const {
    if (terms_.empty()) throw DomainError("degree of the zero polynomial");
    return terms_.front().mono.degree();
  }

  template <class Pred>
  std::uint32_t total_degree_if(Pred pred) const {
    if (terms_.empty()) throw DomainError("degree of the zero polynomial");
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree_if(pred));
    return d;
  }

  std::uint32_t degree(VarId v) const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree(v));
    return d;
  }

  std::set<VarId> variables() const {
    std::set<VarId> vs;
    for (const auto& t : terms_)
      for (const auto& f : t.mono.factors()) vs.insert(f.first);
    return vs;
  }

  bool contains_var(VarId v) const {
    for (const auto& t : terms_)
      if (t.mono.degree(v) > 0) return true;
    return false;
  }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  SparsePoly& operator+=(const SparsePoly& o) { return *this = merge(*this, o, false); }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = merge(*this, o, true); }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, false); }
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, true); }

  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
    if (a.terms_.empty() || b.terms_.empty()) return {};
    if (b.is_constant()) return a.scaled(b.terms_[0].coef);
    if (a.is_constant()) return b.scaled(a.terms_[0].coef);
    std::map<Monomial, F, GrevlexGreater> acc;
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) {
        Monomial m = x.mono * y.mono;
        F c = x.coef * y.coef;
        auto [it, fresh] = acc.try_emplace(std::move(m), c);
        if (!fresh) it->second += c;
      }
    }
    return from_map(std::move(acc));
  }

  SparsePoly scaled(const F& c) const {
    if (is_zero(c)) return {};
    SparsePoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      F v = t.coef * c;
      if (!is_zero(v)) r.terms_.push_back({t.mono, std::move(v)});
    }
    return r;
  }

  SparsePoly times_monomial(const Monomial& m) const {
    SparsePoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coef});
    return r;
  }

  SparsePoly pow(std::uint32_t e) const {
    SparsePoly result(F(1));
    SparsePoly base = *this;
    while (e > 0) {
      if (e & 1U) result = result * base;
      e >>= 1U;
      if (e > 0) base = base * base;
    }
    return result;
  }

  /// Partial derivative with respect to v.
  SparsePoly partial(VarId v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
      const std::uint32_t e = t.mono.degree(v);
      if (e == 0) continue;
      out.push_back({t.mono / Monomial::var(v), t.coef * F(static_cast<long>(e))});
    }
    return from_terms(std::move(out));
  }

  /// Coefficients as a polynomial in v: result[j] multiplies v^j.
  std::vector<SparsePoly> coefficients_in(VarId v) const {
    std::vector<std::vector<Term>> buckets(degree(v) + 1);
    for (const auto& t : terms_) buckets[t.mono.degree(v)].push_back({t.mono.without(v), t.coef});
    std::vector<SparsePoly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) out.push_back(from_terms(std::move(b)));
    return out;
  }

  static SparsePoly from_coefficients(VarId v, const std::vector<SparsePoly>& cs) {
    std::vector<Term> out;
    for (std::size_t j = 0; j < cs.size(); ++j) {
      const Monomial vj = Monomial::var(v, static_cast<std::uint32_t>(j));
      for (const auto& t : cs[j].terms_) out.push_back({t.mono * vj, t.coef});
    }
    return from_terms(std::move(out));
  }

  /// Simultaneous substitution of variables by polynomials.
  SparsePoly substitute(const std::map<VarId, SparsePoly>& bindings) const {
    SparsePoly result;
    std::map<std::pair<VarId, std::uint32_t>, SparsePoly> powers;
    for (const auto& t : terms_) {
      std::vector<Monomial::Factor> kept;
      SparsePoly factor(t.coef);
      for (const auto& [v, e] : t.mono.factors()) {
        auto it = bindings.find(v);
        if (it == bindings.end()) {
          kept.emplace_back(v, e);
          continue;
        }
        auto key = std::make_pair(v, e);
        auto pit = powers.find(key);
        if (pit == powers.end()) pit = powers.emplace(key, it->second.pow(e)).first;
        factor = factor * pit->second;
      }
      result += factor.times_monomial(Monomial::from_factors(std::move(kept)));
    }
    return result;
  }

  /// Applies `fn` to every coefficient (e.g. field conversion).
  template <class G, class Fn>
  SparsePoly<G> map_coefficients(Fn fn) const {
    std::vector<typename SparsePoly<G>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.mono, fn(t.coef)});
    return SparsePoly<G>::from_terms(std::move(out));
  }

  /// Scales so that the leading coefficient is one.
  SparsePoly monic() const {
    if (terms_.empty()) return {};
    return scaled(F(1) / terms_.front().coef);
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const SparsePoly& a, const SparsePoly& b) { return !(a == b); }

 private:
  static SparsePoly from_map(std::map<Monomial, F, GrevlexGreater>&& acc) {
    SparsePoly r;
    r.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!is_zero(c)) r.terms_.push_back({m, std::move(c)});
    return r;
  }

  static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool subtract) {
    SparsePoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int c;
      if (i == a.terms_.size()) {
        c = -1;
      } else if (j == b.terms_.size()) {
        c = 1;
      } else {
        c = grevlex_cmp(a.terms_[i].mono, b.terms_[j].mono);
      }
      if (c > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (c < 0) {
        const auto& t = b.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? F(-t.coef) : t.coef});
      } else {
        F v = subtract ? F(a.terms_[i].coef - b.terms_[j].coef) : F(a.terms_[i].coef + b.terms_[j].coef);
        if (!is_zero(v)) r.terms_.push_back({a.terms_[i].mono, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

// ---------------------------------------------------------------------------
// Division, pseudo-remainders and gcds over a field.

/// Exact quotient a / b. Throws DomainError if b does not divide a.
template <class F>
SparsePoly<F> divide_exact(const SparsePoly<F>& a, const SparsePoly<F>& b) {
  if (b.is_zero_poly()) throw DomainError("division by the zero polynomial");
  if (b.is_constant()) return a.scaled(F(1) / b.leading_coef());
  using Term = typename SparsePoly<F>::Term;
  std::vector<Term> quotient;
  SparsePoly<F> rem = a;
  const auto& lt = b.leading_term();
  while (!rem.is_zero_poly()) {
    const auto& r0 = rem.leading_term();
    if (!lt.mono.divides(r0.mono)) throw DomainError("inexact polynomial division");
    Term q{r0.mono / lt.mono, r0.coef / lt.coef};
    rem -= SparsePoly<F>::term(q.mono, q.coef) * b;
    quotient.push_back(std::move(q));
  }
  return SparsePoly<F>::from_terms(std::move(quotient));
}

/// Whether b divides a (b nonzero).
template <class F>
bool divides(const SparsePoly<F>& b, const SparsePoly<F>& a) {
  try {
    (void)divide_exact(a, b);
    return true;
  } catch (const DomainError&) {
    return false;
  }
}

/// Pseudo-remainder of a by b viewed as univariate polynomials in v.
template <class F>
SparsePoly<F> pseudo_remainder(const SparsePoly<F>& a, const SparsePoly<F>& b, VarId v) {
  auto bc = b.coefficients_in(v);
  const std::size_t db = bc.size() - 1;
  auto r = a.coefficients_in(v);
  const SparsePoly<F>& lb = bc.back();
  while (!r.empty() && r.size() - 1 >= db) {
    while (!r.empty() && r.back().is_zero_poly()) r.pop_back();
    if (r.empty() || r.size() - 1 < db) break;
    const std::size_t dr = r.size() - 1;
    SparsePoly<F> lr = r.back();
    for (auto& c : r) c = c * lb;
    for (std::size_t j = 0; j <= db; ++j) r[dr - db + j] -= lr * bc[j];
    r.pop_back();
  }
  while (!r.empty() && r.back().is_zero_poly()) r.pop_back();
  return SparsePoly<F>::from_coefficients(v, r);
}

template <class F>
SparsePoly<F> gcd(const SparsePoly<F>& a, const SparsePoly<F>& b);

/// Gcd of the coefficients of p viewed as a polynomial in v (monic).
template <class F>
SparsePoly<F> content_in(const SparsePoly<F>& p, VarId v) {
  SparsePoly<F> g;
  for (const auto& c : p.coefficients_in(v)) {
    if (c.is_zero_poly()) continue;
    g = gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

template <class F>
SparsePoly<F> primitive_part_in(const SparsePoly<F>& p, VarId v) {
  if (p.is_zero_poly()) return p;
  return divide_exact(p, content_in(p, v));
}

/// Monic gcd over the field F, by recursive primitive remainder sequences.
template <class F>
SparsePoly<F> gcd(const SparsePoly<F>& a, const SparsePoly<F>& b) {
  if (a.is_zero_poly()) return b.monic();
  if (b.is_zero_poly()) return a.monic();
  if (a.is_constant() || b.is_constant()) return SparsePoly<F>(F(1));
  const VarId v = std::max(*a.variables().rbegin(), *b.variables().rbegin());
  if (!a.contains_var(v)) return gcd(a, content_in(b, v));
  if (!b.contains_var(v)) return gcd(content_in(a, v), b);
  const auto ca = content_in(a, v);
  const auto cb = content_in(b, v);
  const auto g = gcd(ca, cb);
  SparsePoly<F> p = divide_exact(a, ca);
  SparsePoly<F> q = divide_exact(b, cb);
  if (p.degree(v) < q.degree(v)) std::swap(p, q);
  while (!q.is_zero_poly() && q.contains_var(v)) {
    SparsePoly<F> r = pseudo_remainder(p, q, v);
    p = std::move(q);
    q = r.is_zero_poly() ? r : primitive_part_in(r, v);
  }
  // q == 0: p is the primitive gcd; q constant in v: the primitive parts are coprime.
  SparsePoly<F> h = q.is_zero_poly() ? primitive_part_in(p, v) : SparsePoly<F>(F(1));
  return (g * h).monic();
}

template <class F>
SparsePoly<F> lcm(const SparsePoly<F>& a, const SparsePoly<F>& b) {
  return divide_exact(a * b, gcd(a, b)).monic();
}

}  // namespace dalg
