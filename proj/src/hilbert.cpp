#include "dalg/hilbert.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

namespace dalg {

std::size_t default_budget() {
  if (const char* env = std::getenv("DALG_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 20'000'000;
}

Integer monomial_count(std::size_t v, std::uint32_t k) {
  if (v == 0) return k == 0 ? 1 : 0;
  return binomial(v - 1 + k, v - 1);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kRegular:
      return "regular";
    case Verdict::kFailed:
      return "failed";
    case Verdict::kUnchecked:
      break;
  }
  return "unchecked";
}

std::string to_csv(const HilbertProfile& p) {
  std::ostringstream out;
  out << "degree,hf,closed_form,verdict\n";
  for (std::size_t k = 0; k < p.values.size(); ++k) {
    out << k << ',' << p.values[k] << ',';
    if (p.closed_form && k < p.closed_form->size()) out << (*p.closed_form)[k];
    out << ',' << to_string(k < p.verdicts.size() ? p.verdicts[k] : Verdict::kUnchecked) << '\n';
  }
  return out.str();
}

namespace {

// prefix_ranks[D][j]: rank of <g_0..g_j> in degree D.
template <class Scalar>
std::vector<std::vector<std::size_t>> prefix_ranks(const std::vector<SparsePoly<Scalar>>& gens,
                                                   const std::vector<VarId>& vars, std::uint32_t upto,
                                                   std::size_t budget) {
  MacaulayOptions opt;
  opt.budget = budget;
  MacaulayEngine<Scalar> engine(vars, gens, opt);
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t D = 0; D <= upto; ++D) out.push_back(engine.step().prefix_rank);
  return out;
}

std::vector<std::vector<std::size_t>> prefix_ranks(const std::vector<DPoly>& gens, const std::vector<VarId>& vars,
                                                   std::uint32_t upto, std::size_t budget) {
  if (std::all_of(gens.begin(), gens.end(), has_rational_coefficients)) {
    std::vector<SparsePoly<Rational>> rg;
    for (const auto& g : gens) rg.push_back(to_rational(g));
    return prefix_ranks(rg, vars, upto, budget);
  }
  return prefix_ranks<Coeff>(gens, vars, upto, budget);
}

// HF of the prefix <g_0..g_{j-1}> in degree D; j = 0 is the zero ideal.
Integer prefix_hf(const std::vector<std::vector<std::size_t>>& ranks, std::size_t v, std::uint32_t D,
                  std::size_t j) {
  const Integer total = monomial_count(v, D);
  return j == 0 ? total : total - Integer(static_cast<unsigned long>(ranks[D][j - 1]));
}

}  // namespace

std::vector<Integer> hf_values(const std::vector<DPoly>& generators, const std::vector<VarId>& vars,
                               std::uint32_t upto, std::size_t budget) {
  const auto ranks = prefix_ranks(generators, vars, upto, budget);
  std::vector<Integer> out;
  for (std::uint32_t D = 0; D <= upto; ++D) out.push_back(prefix_hf(ranks, vars.size(), D, generators.size()));
  return out;
}

Integer hf(const std::vector<DPoly>& generators, const std::vector<VarId>& vars, std::uint32_t k,
           std::size_t budget) {
  return hf_values(generators, vars, k, budget).back();
}

std::vector<Integer> hs_regular_closed_form(const std::vector<std::uint32_t>& degrees, std::uint32_t v,
                                            std::uint32_t upto) {
  if (v == 0) throw DomainError("closed form needs at least one variable");
  // Numerator prod (1 - t^d), truncated.
  std::vector<Integer> num(upto + 1);
  num[0] = 1;
  for (std::uint32_t d : degrees) {
    if (d == 0) throw DomainError("generator degrees must be positive");
    for (std::uint32_t k = upto + 1; k-- > d;) num[k] -= num[k - d];
  }
  std::vector<Integer> out(upto + 1);
  for (std::uint32_t k = 0; k <= upto; ++k)
    for (std::uint32_t j = 0; j <= k; ++j)
      if (num[j] != 0) out[k] += num[j] * monomial_count(v, k - j);
  return out;
}

std::uint32_t default_cutoff(const std::vector<DPoly>& generators) {
  std::uint32_t dmax = 0;
  for (const auto& g : generators) dmax = std::max(dmax, g.total_degree());
  return std::max<std::uint32_t>(8, 2 * dmax + 2);
}

RegularityReport check_regular_sequence(const std::vector<DPoly>& generators, const std::vector<VarId>& vars,
                                        std::uint32_t cutoff, std::size_t budget) {
  std::vector<std::uint32_t> degrees;
  std::uint32_t dmax = 0;
  for (const auto& g : generators) {
    if (g.is_zero_poly()) throw DomainError("generators must be nonzero");
    const std::uint32_t d = g.total_degree();
    for (const auto& t : g.terms())
      if (t.mono.degree() != d) throw DomainError("check_regular_sequence needs homogeneous generators");
    degrees.push_back(d);
    dmax = std::max(dmax, d);
  }
  const std::uint32_t top = cutoff + dmax;
  const auto ranks = prefix_ranks(generators, vars, top, budget);
  const std::size_t v = vars.size();

  RegularityReport rep;
  rep.variables = v;
  rep.cutoff = cutoff;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    std::vector<Verdict> row;
    for (std::uint32_t k = 0; k <= cutoff; ++k) {
      const std::uint32_t d = degrees[i];
      const Integer lhs = prefix_hf(ranks, v, k + d, i + 1);
      const Integer rhs = prefix_hf(ranks, v, k + d, i) - prefix_hf(ranks, v, k, i);
      const bool ok = lhs == rhs;
      row.push_back(ok ? Verdict::kRegular : Verdict::kFailed);
      if (!ok && rep.regular) {
        rep.regular = false;
        rep.first_failure = std::make_pair(i, k);
      }
    }
    rep.verdicts.push_back(std::move(row));
  }

  HilbertProfile& prof = rep.profile;
  for (std::uint32_t D = 0; D <= top; ++D) prof.values.push_back(prefix_hf(ranks, v, D, generators.size()));
  prof.closed_form = hs_regular_closed_form(degrees, static_cast<std::uint32_t>(v), top);
  // Degree D is certified by the closed form when every injectivity check
  // landing at or below D passed.
  for (std::uint32_t D = 0; D <= top; ++D) {
    Verdict verdict = Verdict::kRegular;
    for (std::size_t i = 0; i < generators.size(); ++i) {
      for (std::uint32_t k = 0; k + degrees[i] <= D; ++k) {
        if (k > cutoff) {
          if (verdict == Verdict::kRegular) verdict = Verdict::kUnchecked;
          break;
        }
        if (rep.verdicts[i][k] == Verdict::kFailed) verdict = Verdict::kFailed;
      }
    }
    prof.verdicts.push_back(verdict);
  }
  return rep;
}

DimEstimate hilbert_dim_estimate(const HilbertProfile& profile, std::uint32_t from, std::uint32_t to) {
  if (to < from + 1 || to >= profile.values.size())
    throw DomainError("hilbert_dim_estimate: window must hold at least two known values");
  std::vector<std::vector<Integer>> diff{{profile.values.begin() + from, profile.values.begin() + to + 1}};
  auto constant = [](const std::vector<Integer>& row) {
    return std::all_of(row.begin(), row.end(), [&](const Integer& x) { return x == row.front(); });
  };
  while (!constant(diff.back())) {
    const auto& last = diff.back();
    if (last.size() <= 2) throw DomainError("hilbert_dim_estimate: window too short for a stable fit");
    std::vector<Integer> next;
    for (std::size_t k = 0; k + 1 < last.size(); ++k) next.push_back(last[k + 1] - last[k]);
    diff.push_back(std::move(next));
  }
  DimEstimate est;
  const std::size_t j = diff.size() - 1;
  est.degree = diff.back().front() == 0 ? static_cast<int>(j) - 1 : static_cast<int>(j);

  // Newton form sum_i Delta^i f(from) * C(k - from, i), expanded in k.
  std::vector<Rational> poly(1, Rational(0));
  std::vector<Rational> basis(1, Rational(1));  // C(k - from, i) as a polynomial in k
  for (std::size_t i = 0; i <= j; ++i) {
    if (i > 0) {
      std::vector<Rational> next(basis.size() + 1);
      const Rational shift = Rational(static_cast<long>(from) + static_cast<long>(i) - 1);
      for (std::size_t t = 0; t < basis.size(); ++t) {
        next[t + 1] += basis[t] / static_cast<long>(i);
        next[t] -= basis[t] * shift / static_cast<long>(i);
      }
      basis = std::move(next);
    }
    if (poly.size() < basis.size()) poly.resize(basis.size());
    for (std::size_t t = 0; t < basis.size(); ++t) poly[t] += Rational(diff[i].front()) * basis[t];
  }
  while (poly.size() > 1 && sgn(poly.back()) == 0) poly.pop_back();
  est.polynomial = poly;
  if (to + 1 < profile.values.size()) {
    Rational at = 0;
    for (std::size_t t = poly.size(); t-- > 0;) at = at * static_cast<long>(to + 1) + poly[t];
    est.stable = at == Rational(profile.values[to + 1]);
  }
  return est;
}

DRegularityReport check_dregular(const SystemSpec& s, std::uint32_t rho, std::uint32_t cutoff, std::size_t budget) {
  const SystemSpec p = prolong(s, rho);
  DRegularityReport rep;
  for (const auto& g : p.generators()) rep.homogenized.push_back(homogenize(g));
  rep.variables = ring_variables(p);
  rep.sequence = check_regular_sequence(rep.homogenized, rep.variables, cutoff, budget);
  rep.expected_dimension =
      static_cast<long>(rep.variables.size()) - 1 - static_cast<long>(rep.homogenized.size());
  const auto& values = rep.sequence.profile.values;
  const auto last = static_cast<std::uint32_t>(values.size() - 1);
  // Fit on the top of the computed range, keeping one value for the
  // stability check.
  const std::uint32_t want = static_cast<std::uint32_t>(std::max<long>(rep.expected_dimension, 0)) + 3;
  if (last >= want + 1) {
    try {
      rep.fitted = hilbert_dim_estimate(rep.sequence.profile, last - 1 - want, last - 1);
    } catch (const DomainError&) {
      rep.fitted.reset();
    }
  }
  return rep;
}

}  // namespace dalg
