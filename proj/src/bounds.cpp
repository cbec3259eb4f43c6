#include "dalg/bounds.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "dalg/errors.hpp"
#include "dalg/jet.hpp"
#include "dalg/row_echelon.hpp"
#include "dalg/sparse_poly.hpp"

namespace dalg {

namespace {

Integer pow10(unsigned e) { return ipow(Integer(10), e); }

// floor(N^(1/q)) and whether the root is exact.
std::pair<Integer, bool> iroot(const Integer& n, unsigned long q) {
  Integer r;
  const int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), q);
  return {r, exact != 0};
}

// Threshold of the shape (r+1) * (base^{p/q} - 1) = N^{1/q} - (r+1) with
// N = base^p * (r+1)^q.
ThresholdBound power_threshold(const Integer& base, unsigned long p, unsigned long q, std::uint32_t r,
                               unsigned digits) {
  if (base < 1) throw DomainError("degrees must be at least 1");
  const Integer r1 = r + 1;
  const Integer n = ipow(base, p) * ipow(r1, q);
  const auto [root, exact] = iroot(n, q);
  ThresholdBound out;
  out.exact = exact;
  // Smallest X with X^q > N is floor(N^{1/q}) + 1; k = X - (r+1).
  out.k_min = root + 1 - r1;
  if (exact) {
    out.lower = out.upper = Rational(root - r1);
  } else {
    const Integer scale = pow10(digits);
    const auto [scaled, unused] = iroot(n * ipow(scale, q), q);
    out.lower = Rational(scaled, scale) - Rational(r1);
    out.lower.canonicalize();
    out.upper = out.lower + Rational(Integer(1), scale);
    out.upper.canonicalize();
  }
  return out;
}

void check_orders(std::uint32_t r_min, std::uint32_t r_l, std::uint32_t r) {
  if (r < r_min) throw DomainError("order r must be at least r_min");
  if (r_l > r_min) throw DomainError("r_l must not exceed r_min");
}

}  // namespace

std::string ThresholdBound::threshold_text() const {
  if (exact) return lower.get_str();
  // Decimal expansion of the lower end; the enclosure width fixes the
  // number of digits.
  const Integer den = upper.get_den();
  unsigned digits = 0;
  for (Integer t = den; t > 1; t /= 10) ++digits;
  const Integer scaled = (lower.get_num() * pow10(digits)) / lower.get_den();
  std::string s = Integer(abs(scaled)).get_str();
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return (scaled < 0 ? "-" : "") + s + "...";
}

ThresholdBound theorem_bound(const Integer& d, std::uint32_t r_min, std::uint32_t r_l, std::uint32_t r,
                             unsigned digits) {
  check_orders(r_min, r_l, r);
  // 1 + (r_min - r_l)/(r - r_min + 1) = (r - r_l + 1)/(r - r_min + 1).
  return power_threshold(d, r - r_l + 1, r - r_min + 1, r, digits);
}

Integer sufficiency_k(const Integer& d, std::uint32_t r_min, std::uint32_t r_l, std::uint32_t r) {
  check_orders(r_min, r_l, r);
  if (d < 1) throw DomainError("d must be at least 1");
  const Integer factor = ipow(d, r - r_l + 1);
  for (unsigned long k = 1;; ++k) {
    if (binomial(r + 1 + k, r + 1) > factor * binomial(r_min + k, k)) return Integer(static_cast<unsigned long>(k));
  }
}

ThresholdBound plus_times_bound(const Integer& deg_q, const Integer& d, std::uint32_t r_min, std::uint32_t r,
                                unsigned digits) {
  check_orders(r_min, 0, r);
  if (deg_q < 1) throw DomainError("deg Q must be at least 1");
  // 1 + r_min/(r - r_min + 1) = (r + 1)/(r - r_min + 1).
  return power_threshold(deg_q * d, r + 1, r - r_min + 1, r, digits);
}

ThresholdBound div_bound(const Integer& deg_qn, const Integer& deg_qd, const Integer& d, std::uint32_t r_min,
                         std::uint32_t r, unsigned digits) {
  return plus_times_bound(std::max(deg_qn, deg_qd), d, r_min, r, digits);
}

ThresholdBound composition_bound(std::uint32_t r1, std::uint32_t r2, const Integer& d1, const Integer& d2) {
  if (d1 < 1 || d2 < 1) throw DomainError("degrees must be at least 1");
  const unsigned long m = r1 + r2 + 1;
  const Integer t = m * (factorial(m) * ipow(d1, r2) * ipow(d2, r1) - 1);
  ThresholdBound out;
  out.exact = true;
  out.lower = out.upper = Rational(t);
  out.k_min = t + 1;
  return out;
}

std::vector<CurvePoint> curve(const Integer& d, std::uint32_t r_min, std::uint32_t r_l, std::uint32_t r_from,
                              std::uint32_t r_to) {
  if (r_from > r_to) throw DomainError("empty order range");
  std::vector<CurvePoint> out;
  for (std::uint32_t r = r_from; r <= r_to; ++r) {
    CurvePoint p;
    p.r = r;
    p.k_min = sufficiency_k(d, r_min, r_l, r);
    p.monomial_count = binomial(p.k_min.get_ui() + r + 1, r + 1);
    out.push_back(std::move(p));
  }
  return out;
}

std::string curve_csv(const std::vector<CurvePoint>& points) {
  std::ostringstream out;
  out << "r,k_min,monomial_count\n";
  for (const auto& p : points) out << p.r << ',' << p.k_min << ',' << p.monomial_count << '\n';
  return out.str();
}

RelationReport relation_experiment(std::uint32_t n, std::uint32_t d, std::uint64_t seed) {
  if (n < 1 || n > 3 || d < 1 || d > 4) throw DomainError("relation experiment is limited to n <= 3, d <= 4");
  using QPoly = SparsePoly<Rational>;
  RelationReport rep;
  rep.n = n;
  rep.d = d;
  rep.seed = seed;
  rep.k_degree_bound = (n + 1) * (ipow(Integer(d), n) - 1);
  for (std::uint32_t k = 1;; ++k) {
    if (binomial(n + 1 + k, n + 1) > binomial(n + k * d, n)) {
      rep.k_counting = k;
      break;
    }
  }

  std::vector<VarId> xs;
  for (std::uint32_t i = 1; i <= n; ++i) xs.push_back(yvar(i));
  std::vector<Monomial> dense;  // all monomials of degree <= d in the xs
  {
    std::vector<Monomial> frontier{Monomial()};
    dense = frontier;
    for (std::uint32_t deg = 1; deg <= d; ++deg) {
      std::vector<Monomial> next;
      for (const auto& m : frontier)
        for (VarId v : xs)
          if (m.is_one() || v >= m.max_var()) next.push_back(m * Monomial::var(v));
      dense.insert(dense.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-9, 9);
  constexpr std::uint32_t kMaxAttempts = 16;
  for (rep.attempts = 1; rep.attempts <= kMaxAttempts; ++rep.attempts) {
    std::vector<QPoly> fs;
    for (std::uint32_t i = 0; i <= n; ++i) {
      std::vector<QPoly::Term> ts;
      for (const auto& m : dense) ts.push_back({m, Rational(coef(rng))});
      fs.push_back(QPoly::from_terms(std::move(ts)));
    }
    // Degenerate: a polynomial below degree d, or 1, f_0..f_n linearly
    // dependent.
    bool degenerate = false;
    RowEchelon<Rational> affine;
    degenerate |= !affine.insert(QPoly(Rational(1)));
    for (const auto& f : fs) {
      if (f.is_zero_poly() || f.total_degree() != d) degenerate = true;
      if (!affine.insert(f)) degenerate = true;
    }
    if (degenerate) continue;

    // Products f^a for |a| <= k, built degree by degree; a relation of
    // degree <= k exists iff these are linearly dependent.
    RowEchelon<Rational> span;
    span.insert(QPoly(Rational(1)));
    std::vector<std::pair<std::vector<std::uint32_t>, QPoly>> frontier{{std::vector<std::uint32_t>(n + 1, 0),
                                                                          QPoly(Rational(1))}};
    for (std::uint32_t k = 1;; ++k) {
      std::vector<std::pair<std::vector<std::uint32_t>, QPoly>> next;
      bool dependent = false;
      for (const auto& [expo, prod] : frontier) {
        // Multiply only by f_i with i >= last used index to enumerate each
        // exponent vector once.
        std::uint32_t start = 0;
        for (std::uint32_t i = 0; i <= n; ++i)
          if (expo[i] > 0) start = i;
        for (std::uint32_t i = start; i <= n; ++i) {
          auto e = expo;
          ++e[i];
          QPoly p = prod * fs[i];
          if (!span.insert(p)) dependent = true;
          next.emplace_back(std::move(e), std::move(p));
        }
      }
      if (dependent) {
        rep.k_observed = k;
        return rep;
      }
      frontier = std::move(next);
    }
  }
  throw DomainError("relation experiment: every sample was degenerate");
}

}  // namespace dalg
