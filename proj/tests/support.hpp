#pragma once

// Seeded random generators shared by the property suites.

#include <cstdint>
#include <random>
#include <vector>

#include "dalg/dpoly.hpp"

namespace dalg::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long small(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rational rational() {
    const long num = small(-9, 9);
    const long den = small(1, 4);
    return make_rational(num, den);
  }

  Coeff coeff(const FieldDesc& f) {
    Coeff c = rational();
    if (f.gaussian && small(0, 2) == 0) c += Coeff::imaginary_unit() * Coeff(rational());
    if (f.has_x && small(0, 2) == 0) c *= Coeff::variable(kXVar) + Coeff(small(-2, 2));
    if (!f.params.empty() && small(0, 3) == 0) c += Coeff::variable(param_var(0));
    if (f.has_x && small(0, 5) == 0) {
      const Coeff den = Coeff::variable(kXVar) + Coeff(small(1, 3));
      c /= den;
    }
    return c;
  }

  // Random polynomial over the given jet variables.
  DPoly poly(const FieldDesc& f, const std::vector<VarId>& vars, std::uint32_t max_deg, int max_terms) {
    std::vector<DPoly::Term> ts;
    const int n = static_cast<int>(small(1, max_terms));
    for (int t = 0; t < n; ++t) {
      std::vector<Monomial::Factor> fs;
      std::uint32_t budget = static_cast<std::uint32_t>(small(0, max_deg));
      for (VarId v : vars) {
        if (budget == 0) break;
        const auto e = static_cast<std::uint32_t>(small(0, budget));
        if (e > 0) fs.emplace_back(v, e);
        budget -= e;
      }
      Coeff c = coeff(f);
      if (c.is_zero()) c = Coeff(1);
      ts.push_back({Monomial::from_factors(fs), c});
    }
    return DPoly::from_terms(std::move(ts));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

inline std::vector<VarId> jets_of(std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> fam_orders) {
  std::vector<VarId> out;
  for (auto [fam, ord] : fam_orders)
    for (std::uint32_t j = 0; j <= ord; ++j) out.push_back(yvar(fam, j));
  return out;
}

}  // namespace dalg::testing
