#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "dalg/coeff.hpp"
#include "dalg/jet.hpp"
#include "dalg/sparse_poly.hpp"

namespace dalg {

/// Differential polynomial: sparse polynomial in s and jet variables with
/// coefficients in the base field. Constant parameters and x live inside
/// the coefficients.
using DPoly = SparsePoly<Coeff>;

/// Coefficient field descriptor: Q or Q(i), optionally extended by constant
/// parameters (derivative zero) and by x (x' = 1).
struct FieldDesc {
  bool gaussian = false;
  std::vector<std::string> params;
  bool has_x = false;

  static FieldDesc rationals() { return {}; }
  static FieldDesc gaussian_rationals() { return {true, {}, false}; }
  static FieldDesc rational_functions(std::vector<std::string> params, bool has_x, bool gaussian = false) {
    return {gaussian, std::move(params), has_x};
  }

  /// Accepts "Q", "Qi", "Q(a,c;x)", "Q(;x)", "Qi(a;)".
  static FieldDesc parse(std::string_view text);
  std::string to_string() const;

  /// Checks that parameter names are distinct identifiers disjoint from the
  /// reserved names s, x, i, z and y<digits>.
  void validate() const;

  std::optional<std::uint32_t> param_index(std::string_view name) const;
  std::string var_name(VarId v) const;
  NameFn names() const {
    return [this](VarId v) { return var_name(v); };
  }

  /// Whether c is an element of this field (no stray i, x or parameters).
  bool admits(const Coeff& c) const;

  friend bool operator==(const FieldDesc&, const FieldDesc&) = default;
};

std::string to_string(const DPoly& p, const FieldDesc& field);

/// Constant coefficient as a DPoly.
inline DPoly dconst(const Coeff& c) { return DPoly(c); }
inline DPoly dvar(VarId v, std::uint32_t e = 1) { return DPoly::variable(v, e); }

// ---------------------------------------------------------------------------
// Derivations.

/// Standard derivation: y_i^(j) -> y_i^(j+1), s -> 0, coefficients via
/// x' = 1 and parameters' = 0.
DPoly derive(const DPoly& p);
DPoly derive(const DPoly& p, std::uint32_t times);

/// Twisted derivation of the composition ring: outer^(l) -> inner' *
/// outer^(l+1); every other variable is differentiated as usual.
DPoly derive_chain(const DPoly& p, Family outer = Family::y(1), Family inner = Family::y(2));

// ---------------------------------------------------------------------------
// Homogenization with s.

/// Multiplies each term by s^(deg P - deg term). Rejects 0 and inputs
/// containing s.
DPoly homogenize(const DPoly& p);
/// Sets s = 1.
DPoly dehomogenize(const DPoly& p);

// ---------------------------------------------------------------------------
// Degrees and orders.

/// Total degree over jet variables (s, x and parameters excluded).
std::uint32_t jet_degree(const DPoly& p);
/// Total degree over the jets of one family.
std::uint32_t family_degree(const DPoly& p, Family f);
/// Largest j with f^(j) occurring; 0 if the family does not occur.
std::uint32_t order_in(const DPoly& p, Family f);
std::set<Family> families(const DPoly& p);

struct DegreeProfile {
  std::uint32_t total_degree = 0;
  std::map<VarId, std::uint32_t> degree_in;
  std::map<Family, std::uint32_t> order;
};

DegreeProfile degree_profile(const DPoly& p);

/// Whether every coefficient lies in Q.
bool has_rational_coefficients(const DPoly& p);
/// Coefficient maps between DPoly and polynomials over Q. to_rational
/// requires has_rational_coefficients.
SparsePoly<Rational> to_rational(const DPoly& p);
DPoly from_rational(const SparsePoly<Rational>& p);

/// Simultaneous substitution. Binding values may not contain bound
/// variables.
DPoly substitute(const DPoly& p, const std::map<VarId, DPoly>& bindings);

// ---------------------------------------------------------------------------
// Systems.

enum class DerivationMode { kStandard, kChain };

/// Generators P_1..P_n of a differential ideal together with their field,
/// optional elimination target and derivation. Orders r_i are recomputed on
/// construction.
class SystemSpec {
 public:
  SystemSpec(FieldDesc field, std::vector<DPoly> generators, std::optional<Family> target = std::nullopt,
             DerivationMode mode = DerivationMode::kStandard);

  const FieldDesc& field() const { return field_; }
  const std::vector<DPoly>& generators() const { return generators_; }
  const std::optional<Family>& target() const { return target_; }
  DerivationMode mode() const { return mode_; }
  const std::map<Family, std::uint32_t>& orders() const { return orders_; }
  std::uint32_t order(Family f) const;

  /// Sum of the orders over all families.
  std::uint32_t order_sum() const;
  /// Product of generator degrees.
  Integer degree_product() const;

  DPoly derive(const DPoly& p) const;

 private:
  FieldDesc field_;
  std::vector<DPoly> generators_;
  std::optional<Family> target_;
  DerivationMode mode_;
  std::map<Family, std::uint32_t> orders_;
};

/// Generators D^k(P_j) for 0 <= k <= m, listed generator by generator.
SystemSpec prolong(const SystemSpec& s, std::uint32_t m);

/// The ring variables of a system: s followed by f^(0..r_f) for every family.
std::vector<VarId> ring_variables(const SystemSpec& s);

}  // namespace dalg
