#include "dalg/bounds.hpp"
#include "dalg/errors.hpp"
#include "doctest.h"

using namespace dalg;

namespace {

// Reference k_min: scan k until ((k+r+1)/(r+1))^q > base^p, i.e. the
// threshold (r+1)(base^{p/q} - 1) is strictly exceeded.
Integer scan_k_min(const Integer& base, unsigned long p, unsigned long q, unsigned long r) {
  const Integer lhs_rhs = ipow(base, p) * ipow(Integer(r + 1), q);
  for (unsigned long k = 0;; ++k)
    if (ipow(Integer(k + r + 1), q) > lhs_rhs) return Integer(k);
}

// Reference binomial by the multiplicative formula.
Integer pascal(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  Integer c = 1;
  for (unsigned long i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

TEST_CASE("theorem bound hand values") {
  const auto a = theorem_bound(2, 2, 1, 2);
  CHECK(a.exact);
  CHECK(a.lower == 9);
  CHECK(a.k_min == 10);
  CHECK(a.threshold_text() == "9");

  const auto b = theorem_bound(1, 3, 1, 5);
  CHECK(b.lower == 0);
  CHECK(b.k_min == 1);

  // 4 * (2^{3/2} - 1) = 7.3137084989...
  const auto c = theorem_bound(2, 2, 1, 3);
  CHECK_FALSE(c.exact);
  CHECK(c.k_min == 8);
  CHECK(c.lower < c.upper);
  CHECK(c.lower > Rational(73137, 10000));
  CHECK(c.upper < Rational(73138, 10000));
  CHECK(c.threshold_text().rfind("7.313708498", 0) == 0);
  CHECK_THROWS_AS(theorem_bound(2, 3, 1, 2), DomainError);
}

TEST_CASE("sufficiency examples") {
  for (std::uint32_t r = 1; r <= 6; ++r) CHECK(sufficiency_k(1, 1, 0, r) == 1);
  CHECK(sufficiency_k(2, 2, 1, 2) == 10);
  CHECK(sufficiency_k(2, 2, 1, 2) <= theorem_bound(2, 2, 1, 2).k_min);
  // Initial drop of the order-degree trade-off.
  CHECK(sufficiency_k(3, 3, 1, 5) < sufficiency_k(3, 3, 1, 3));
  CHECK(sufficiency_k(3, 3, 1, 3) == 105);
  CHECK(sufficiency_k(3, 3, 1, 5) == 26);
}

TEST_CASE("closure bounds") {
  CHECK(plus_times_bound(1, 1, 2, 3).k_min == 1);
  const auto prod = plus_times_bound(2, 2, 2, 2);
  CHECK(prod.lower == 189);
  CHECK(prod.k_min == 190);
  // Sum: 4 * (2^{4/2} - 1) = 12.
  const auto sum = plus_times_bound(1, 2, 2, 3);
  CHECK(sum.exact);
  CHECK(sum.lower == 12);
  CHECK(sum.k_min == 13);

  CHECK(div_bound(1, 3, 2, 2, 3).k_min == div_bound(3, 1, 2, 2, 3).k_min);
  CHECK(div_bound(1, 1, 1, 2, 2).k_min == 1);
  CHECK(div_bound(2, 1, 2, 2, 2).k_min == 190);

  const auto comp = composition_bound(1, 1, 2, 2);
  CHECK(comp.lower == 69);
  CHECK(comp.k_min == 70);
  CHECK(composition_bound(1, 1, 1, 1).k_min == 16);
  // r1 = 0: (r2+1)! * d1^r2.
  CHECK(composition_bound(0, 2, 3, 5).lower == 3 * (6 * 9 - 1));
}

TEST_CASE("bounds agree with reference scans") {
  for (long d = 1; d <= 4; ++d)
    for (std::uint32_t r_min = 1; r_min <= 4; ++r_min)
      for (std::uint32_t r_l = 0; r_l <= r_min; ++r_l)
        for (std::uint32_t r = r_min; r <= r_min + 4; ++r) {
          CAPTURE(d);
          CAPTURE(r_min);
          CAPTURE(r_l);
          CAPTURE(r);
          CHECK(theorem_bound(d, r_min, r_l, r).k_min == scan_k_min(d, r - r_l + 1, r - r_min + 1, r));
          const Integer k = sufficiency_k(d, r_min, r_l, r);
          const unsigned long ku = k.get_ui();
          const Integer factor = ipow(Integer(d), r - r_l + 1);
          CHECK(pascal(r + 1 + ku, r + 1) > factor * pascal(r_min + ku, ku));
          CHECK_FALSE(pascal(r + ku, r + 1) > factor * pascal(r_min + ku - 1, ku - 1));
        }
}

TEST_CASE("sufficiency never exceeds the closed form") {
  for (long d = 1; d <= 4; ++d)
    for (std::uint32_t r_min = 1; r_min <= 4; ++r_min)
      for (std::uint32_t r_l = 0; r_l <= r_min; ++r_l)
        for (std::uint32_t r = r_min; r <= r_min + 4; ++r)
          CHECK(sufficiency_k(d, r_min, r_l, r) <= theorem_bound(d, r_min, r_l, r).k_min);
}

TEST_CASE("bounds are monotone in d") {
  for (std::uint32_t r_min = 1; r_min <= 3; ++r_min)
    for (std::uint32_t r = r_min; r <= r_min + 3; ++r)
      for (long d = 1; d < 5; ++d) {
        CHECK(theorem_bound(d, r_min, 1, r).k_min <= theorem_bound(d + 1, r_min, 1, r).k_min);
        CHECK(sufficiency_k(d, r_min, 1, r) <= sufficiency_k(d + 1, r_min, 1, r));
        CHECK(plus_times_bound(2, d, r_min, r).k_min <= plus_times_bound(2, d + 1, r_min, r).k_min);
        CHECK(div_bound(1, 2, d, r_min, r).k_min <= div_bound(1, 2, d + 1, r_min, r).k_min);
        CHECK(composition_bound(1, r_min, d, 2).k_min <= composition_bound(1, r_min, d + 1, 2).k_min);
      }
}

TEST_CASE("curve") {
  const auto one = curve(2, 2, 1, 3, 3);
  REQUIRE(one.size() == 1);
  CHECK(one[0].k_min == sufficiency_k(2, 2, 1, 3));

  for (const auto& p : curve(1, 2, 1, 2, 8)) CHECK(p.k_min == 1);

  const auto grid = curve(2, 2, 1, 2, 8);
  std::vector<long> ks;
  std::vector<long> counts;
  for (const auto& p : grid) {
    ks.push_back(p.k_min.get_si());
    counts.push_back(p.monomial_count.get_si());
    // Degree-k monomials in r + 2 variables.
    CHECK(p.monomial_count == pascal(p.k_min.get_ui() + p.r + 1, p.r + 1));
  }
  CHECK(ks == std::vector<long>{10, 7, 6, 6, 7, 7, 7});
  CHECK(counts == std::vector<long>{286, 330, 462, 924, 3432, 6435, 11440});

  // Grids where the monomial count first drops and then rises.
  for (const auto& [d, rmin, rl] : {std::tuple<long, std::uint32_t, std::uint32_t>{2, 2, 0}, {3, 3, 1}}) {
    const auto pts = curve(d, rmin, rl, rmin, rmin + 8);
    CHECK(pts[1].monomial_count < pts[0].monomial_count);
    CHECK(pts.back().monomial_count > pts[1].monomial_count);
  }
  CHECK(curve_csv(one) == "r,k_min,monomial_count\n3,7,330\n");
}

TEST_CASE("relation experiment") {
  const auto a = relation_experiment(1, 3, 7);
  CHECK(a.k_counting == 4);
  CHECK(a.k_degree_bound == 4);
  CHECK(a.k_observed == 3);
  const auto b = relation_experiment(1, 2, 7);
  CHECK(b.k_degree_bound == 2);
  CHECK(b.k_observed == 2);
  const auto c = relation_experiment(2, 2, 7);
  CHECK(c.k_degree_bound == 9);
  CHECK(c.k_observed == 4);
  // Determinism.
  const auto c2 = relation_experiment(2, 2, 7);
  CHECK(c2.k_observed == c.k_observed);
  CHECK(c2.attempts == c.attempts);
  CHECK_THROWS_AS(relation_experiment(4, 2, 1), DomainError);
}
