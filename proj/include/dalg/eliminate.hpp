#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "dalg/bounds.hpp"
#include "dalg/dpoly.hpp"
#include "dalg/macaulay.hpp"
#include "dalg/series.hpp"

namespace dalg {

/// Nonzero element of I^(m) ∩ K[y_l, ..., y_l^(r)], dehomogenized and
/// normalized.
struct Annihilator {
  DPoly poly;
  Family target;
  std::uint32_t order = 0;
  /// Total degree of poly.
  std::uint32_t degree = 0;
  /// Degree of the homogenized layer in which it was found; at least
  /// `degree`, larger when the homogenized generators do not reach the
  /// element's homogenization directly.
  std::uint32_t k_searched = 0;
  /// Number of prolongations m = r - r_l.
  std::uint32_t prolongation = 0;
  /// The row was re-expanded as sum c * mono * h(g) over the prolonged
  /// generators and the identity checked exactly.
  bool membership_certified = false;
  std::optional<Certification> series;
};

/// Per-layer statistics of a search.
struct LayerStats {
  std::uint32_t k = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t rank = 0;
};

struct SearchReport {
  Family target;
  std::uint32_t r = 0;
  std::uint32_t k_max = 0;
  std::optional<Annihilator> found;
  std::vector<LayerStats> layers;
  /// Parameters of the generic degree bound: d = product of generator
  /// degrees, r_min = sum of orders, r_l = order of the target.
  Integer d;
  std::uint32_t r_min = 0;
  std::uint32_t r_l = 0;
  /// Present when r >= r_min.
  std::optional<Integer> sufficiency;
  std::optional<ThresholdBound> theorem;
};

/// Content-free, sign-normalized representative of the line through p:
/// polynomial coefficients with coprime integral rational parts, and the
/// first nonzero rational part of the leading coefficient positive.
/// Idempotent. Throws DomainError on 0.
DPoly normalize_annihilator(const DPoly& p);

/// Searches the homogenized layers of h(I)^(r - r_l) of degree exactly k.
/// nullopt means the layer holds no element supported on s and the target
/// jets; this is not a proof that no annihilator of degree <= k exists.
std::optional<Annihilator> find_annihilator(const SystemSpec& system, Family target, std::uint32_t r,
                                            std::uint32_t k, std::size_t budget = default_budget());

/// Layers k = 1, 2, ..., k_max of one incremental Macaulay computation;
/// stops at the first layer containing a target element.
SearchReport eliminate_search(const SystemSpec& system, Family target, std::uint32_t r, std::uint32_t k_max,
                              std::size_t budget = default_budget());

/// Certifies the annihilator against series witnesses of its target.
void certify(Annihilator& a, const Witnesses& witnesses);

// ---------------------------------------------------------------------------
// Closure systems. Component i must involve only the family y_{i+1}.

/// P_1, ..., P_n, z - Q(y_1, ..., y_n); target z.
SystemSpec sum_product_system(const FieldDesc& field, const std::vector<DPoly>& components, const DPoly& q);
/// P_1, ..., P_n, Q_d z - Q_n; target z.
SystemSpec rational_system(const FieldDesc& field, const std::vector<DPoly>& components, const DPoly& qn,
                           const DPoly& qd);
/// Generators of the composition f1 o f2 with P1 in y1 (order r1) and P2 in
/// y2 (order r2): P1^(j) for j <= r2, P2^(j) for j <= r1 and d^j(z - y1)
/// for j <= r1 + r2, where d is the chain derivation; target z.
SystemSpec composition_system(const FieldDesc& field, const DPoly& p1, const DPoly& p2);

}  // namespace dalg
