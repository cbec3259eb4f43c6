#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dalg/rational.hpp"

namespace dalg {

/// Threshold t of a degree bound; k_min is the smallest integer > t.
///
/// When t is irrational it is enclosed in [lower, upper] with
/// upper - lower = 10^-digits; k_min is still decided by an exact integer
/// comparison, never by the enclosure.
struct ThresholdBound {
  Rational lower;
  Rational upper;
  bool exact = false;
  Integer k_min;
  /// Decimal rendering: the exact value, or `lower` truncated to the
  /// enclosure precision followed by "...".
  std::string threshold_text() const;
};

/// (r+1) * (d^{1+(r_min-r_l)/(r-r_min+1)} - 1). Requires d >= 1,
/// r_l <= r_min <= r.
ThresholdBound theorem_bound(const Integer& d, std::uint32_t r_min, std::uint32_t r_l, std::uint32_t r,
                             unsigned digits = 12);

/// Smallest k >= 1 with C(r+1+k, r+1) > d^{r-r_l+1} * C(r_min+k, k).
Integer sufficiency_k(const Integer& d, std::uint32_t r_min, std::uint32_t r_l, std::uint32_t r);

/// (r+1) * ((deg_Q * d)^{1+r_min/(r-r_min+1)} - 1).
ThresholdBound plus_times_bound(const Integer& deg_q, const Integer& d, std::uint32_t r_min, std::uint32_t r,
                                unsigned digits = 12);

/// plus_times_bound with deg_Q = max(deg Q_n, deg Q_d).
ThresholdBound div_bound(const Integer& deg_qn, const Integer& deg_qd, const Integer& d, std::uint32_t r_min,
                         std::uint32_t r, unsigned digits = 12);

/// (r1+r2+1) * ((r1+r2+1)! * d1^r2 * d2^r1 - 1); always an integer.
ThresholdBound composition_bound(std::uint32_t r1, std::uint32_t r2, const Integer& d1, const Integer& d2);

struct CurvePoint {
  std::uint32_t r = 0;
  Integer k_min;
  /// C(k_min + r + 1, r + 1): degree-k_min monomials in r + 2 variables.
  Integer monomial_count;
};

std::vector<CurvePoint> curve(const Integer& d, std::uint32_t r_min, std::uint32_t r_l, std::uint32_t r_from,
                              std::uint32_t r_to);
/// `r,k_min,monomial_count` with a header line.
std::string curve_csv(const std::vector<CurvePoint>& points);

struct RelationReport {
  std::uint32_t n = 0;
  std::uint32_t d = 0;
  std::uint64_t seed = 0;
  /// Smallest total degree of a nonzero relation among the sample.
  std::uint32_t k_observed = 0;
  /// Smallest k with C(n+1+k, n+1) > C(n+k*d, n).
  std::uint32_t k_counting = 0;
  /// (n+1) * (d^n - 1).
  Integer k_degree_bound;
  /// Samples drawn (1 unless degenerate samples were rejected).
  std::uint32_t attempts = 0;
};

/// Draws n+1 dense polynomials of degree d in n variables with a seeded
/// generator and finds the smallest degree of an algebraic relation among
/// them by exact rank computations. Requires 1 <= n <= 3, 1 <= d <= 4.
RelationReport relation_experiment(std::uint32_t n, std::uint32_t d, std::uint64_t seed);

}  // namespace dalg
