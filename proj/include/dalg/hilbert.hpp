#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dalg/dpoly.hpp"
#include "dalg/macaulay.hpp"

namespace dalg {

enum class Verdict { kRegular, kFailed, kUnchecked };
std::string to_string(Verdict v);

/// HF_I(k) for k = 0..values.size()-1, with the regular-sequence closed
/// form where one applies and a per-degree verdict.
struct HilbertProfile {
  std::vector<Integer> values;
  std::optional<std::vector<Integer>> closed_form;
  std::vector<Verdict> verdicts;
};

/// `degree,hf,closed_form,verdict` with a header line.
std::string to_csv(const HilbertProfile& p);

/// HF_I(k) = C(v-1+k, v-1) - rank of the degree-k Macaulay layer.
Integer hf(const std::vector<DPoly>& generators, const std::vector<VarId>& vars, std::uint32_t k,
           std::size_t budget = default_budget());
/// HF_I(0..upto) in one incremental pass.
std::vector<Integer> hf_values(const std::vector<DPoly>& generators, const std::vector<VarId>& vars,
                               std::uint32_t upto, std::size_t budget = default_budget());

/// Coefficients of prod_j (1 - t^{d_j}) / (1 - t)^v up to t^upto.
std::vector<Integer> hs_regular_closed_form(const std::vector<std::uint32_t>& degrees, std::uint32_t v,
                                            std::uint32_t upto);

struct RegularityReport {
  std::size_t variables = 0;
  std::uint32_t cutoff = 0;
  /// verdicts[i][k]: multiplication by P_i modulo <P_0..P_{i-1}> checked
  /// injective from degree k to k + deg P_i.
  std::vector<std::vector<Verdict>> verdicts;
  /// Regular at every checked degree of every prefix. Failure is
  /// conclusive, success holds up to the cutoff only.
  bool regular = true;
  /// First (prefix, degree) where injectivity fails.
  std::optional<std::pair<std::size_t, std::uint32_t>> first_failure;
  /// Profile of the whole ideal up to cutoff + max degree.
  HilbertProfile profile;
};

/// Default cutoff: max(8, 2 * max generator degree + 2).
std::uint32_t default_cutoff(const std::vector<DPoly>& generators);

/// Checks HF_{I+<P>}(k+d) = HF_I(k+d) - HF_I(k) for every prefix and every
/// k <= cutoff. Generators must be homogeneous.
RegularityReport check_regular_sequence(const std::vector<DPoly>& generators, const std::vector<VarId>& vars,
                                        std::uint32_t cutoff, std::size_t budget = default_budget());

/// Interpolating polynomial of HF on a degree window.
struct DimEstimate {
  /// Degree of the fitted polynomial; -1 when HF vanishes on the window.
  int degree = -1;
  /// Coefficients in k, constant term first.
  std::vector<Rational> polynomial;
  /// The fit predicts the first value after the window (when known).
  bool stable = false;
};

/// Finite-difference fit on HF(from..to). Needs a constant difference row
/// of length at least 2 inside the window.
DimEstimate hilbert_dim_estimate(const HilbertProfile& profile, std::uint32_t from, std::uint32_t to);

struct DRegularityReport {
  RegularityReport sequence;
  std::vector<DPoly> homogenized;
  std::vector<VarId> variables;
  /// v - 1 - n for n generators in v variables.
  long expected_dimension = 0;
  std::optional<DimEstimate> fitted;
};

/// Prolongs to order rho, homogenizes, and checks the resulting tuple for
/// regularity up to the cutoff in the ring of s and all occurring jets.
DRegularityReport check_dregular(const SystemSpec& s, std::uint32_t rho, std::uint32_t cutoff,
                                 std::size_t budget = default_budget());

}  // namespace dalg
