#include "dalg/eliminate.hpp"

#include <numeric>

#include "dalg/errors.hpp"

namespace dalg {

namespace {

Integer lcm_int(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer gcd_int(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

template <class Scalar>
DPoly to_dpoly(const SparsePoly<Scalar>& p) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    return from_rational(p);
  } else {
    return p;
  }
}

template <class Scalar>
std::vector<SparsePoly<Scalar>> convert(const std::vector<DPoly>& gens) {
  if constexpr (std::is_same_v<Scalar, Rational>) {
    std::vector<SparsePoly<Rational>> out;
    for (const auto& g : gens) out.push_back(to_rational(g));
    return out;
  } else {
    return gens;
  }
}

struct Prepared {
  std::vector<DPoly> homogenized;
  std::vector<VarId> vars;
  std::vector<bool> target;
  std::uint32_t prolongation = 0;
};

Prepared prepare(const SystemSpec& system, Family target, std::uint32_t r) {
  if (!system.orders().count(target)) throw DomainError("target " + target.name() + " does not occur in the system");
  const std::uint32_t r_l = system.order(target);
  if (r < r_l) throw DomainError("order r must be at least the order of the target in the system");
  Prepared p;
  p.prolongation = r - r_l;
  const SystemSpec prolonged = prolong(system, p.prolongation);
  for (const auto& g : prolonged.generators()) p.homogenized.push_back(homogenize(g));
  p.vars = ring_variables(prolonged);
  for (VarId v : p.vars) {
    const bool t = v == kSVar || (JetVar::from_id(v).family == target && JetVar::from_id(v).order <= r);
    p.target.push_back(t);
  }
  return p;
}

template <class Scalar>
SearchReport run_search(const SystemSpec& system, Family target, std::uint32_t r, std::uint32_t k_from,
                        std::uint32_t k_max, std::size_t budget) {
  const Prepared prep = prepare(system, target, r);
  const auto gens = convert<Scalar>(prep.homogenized);
  MacaulayOptions opts;
  opts.order = ColumnOrder::kBlockElimination;
  opts.target = prep.target;
  opts.budget = budget;
  opts.record_history = true;
  MacaulayEngine<Scalar> engine(prep.vars, gens, opts);

  SearchReport rep;
  rep.target = target;
  rep.r = r;
  rep.k_max = k_max;
  while (engine.next_degree() <= k_max) {
    const auto layer = engine.step();
    if (layer.degree == 0) continue;
    if (layer.degree >= k_from) rep.layers.push_back({layer.degree, layer.rows, layer.cols, layer.rank});
    if (layer.degree < k_from) continue;
    const auto pivots = engine.target_pivots();
    if (pivots.empty()) continue;

    const std::size_t p = pivots.front();
    const SparsePoly<Scalar> row = engine.row_poly(p);
    std::vector<typename SparsePoly<Scalar>::Term> expansion;
    for (const auto& [origin, coef] : engine.certificate(p)) {
      const Monomial m = engine.to_monomial(origin.multiplier);
      for (const auto& t : gens[origin.generator].terms()) expansion.push_back({t.mono * m, t.coef * coef});
    }
    Annihilator a;
    a.membership_certified = SparsePoly<Scalar>::from_terms(std::move(expansion)) == row;
    a.poly = normalize_annihilator(dehomogenize(to_dpoly(row)));
    a.target = target;
    a.order = order_in(a.poly, target);
    a.degree = jet_degree(a.poly);
    a.k_searched = layer.degree;
    a.prolongation = prep.prolongation;
    rep.found = std::move(a);
    break;
  }
  return rep;
}

SearchReport search(const SystemSpec& system, Family target, std::uint32_t r, std::uint32_t k_from,
                    std::uint32_t k_max, std::size_t budget) {
  bool rational = true;
  for (const auto& g : system.generators()) rational = rational && has_rational_coefficients(g);
  return rational ? run_search<Rational>(system, target, r, k_from, k_max, budget)
                  : run_search<Coeff>(system, target, r, k_from, k_max, budget);
}

void check_component(const DPoly& p, std::uint32_t index) {
  const auto fams = families(p);
  if (fams.size() != 1 || *fams.begin() != Family::y(index))
    throw DomainError("component " + std::to_string(index) + " must involve exactly the family y" +
                      std::to_string(index));
}

void check_no_z(const DPoly& p, const char* what) {
  for (Family f : families(p))
    if (f.is_z()) throw DomainError(std::string(what) + " must not involve z");
}

}  // namespace

DPoly normalize_annihilator(const DPoly& p) {
  if (p.is_zero_poly()) throw DomainError("cannot normalize the zero polynomial");
  DPoly q = p.scaled(Coeff(1) / p.leading_coef());

  // Polynomial coefficients without common factor.
  BasePoly den(GaussRat(1));
  for (const auto& t : q.terms()) den = lcm(den, t.coef.denominator());
  if (!den.is_constant()) q = q.scaled(Coeff(den));
  BasePoly g;
  for (const auto& t : q.terms()) g = gcd(g, t.coef.numerator());
  if (!g.is_constant()) q = q.scaled(Coeff(1) / Coeff(g));

  // Integral, coprime rational parts.
  Integer l = 1;
  for (const auto& t : q.terms()) {
    const BasePoly num = t.coef.numerator();
    for (const auto& bt : num.terms()) {
      l = lcm_int(l, bt.coef.re().get_den());
      l = lcm_int(l, bt.coef.im().get_den());
    }
  }
  Integer h = 0;
  for (const auto& t : q.terms()) {
    const BasePoly num = t.coef.numerator();
    for (const auto& bt : num.terms()) {
      h = gcd_int(h, bt.coef.re().get_num() * (l / bt.coef.re().get_den()));
      h = gcd_int(h, bt.coef.im().get_num() * (l / bt.coef.im().get_den()));
    }
  }
  Rational scale(l, h);
  scale.canonicalize();

  const GaussRat lead = q.leading_coef().numerator().leading_coef();
  if (sgn(lead.re()) < 0 || (sgn(lead.re()) == 0 && sgn(lead.im()) < 0)) scale = -scale;
  return q.scaled(Coeff(scale));
}

std::optional<Annihilator> find_annihilator(const SystemSpec& system, Family target, std::uint32_t r, std::uint32_t k,
                                            std::size_t budget) {
  if (k < 1) throw DomainError("k must be at least 1");
  return search(system, target, r, k, k, budget).found;
}

SearchReport eliminate_search(const SystemSpec& system, Family target, std::uint32_t r, std::uint32_t k_max,
                              std::size_t budget) {
  if (k_max < 1) throw DomainError("k_max must be at least 1");
  SearchReport rep = search(system, target, r, 1, k_max, budget);
  rep.d = system.degree_product();
  rep.r_min = system.order_sum();
  rep.r_l = system.order(target);
  if (r >= rep.r_min && rep.r_l <= rep.r_min) {
    rep.sufficiency = sufficiency_k(rep.d, rep.r_min, rep.r_l, r);
    rep.theorem = theorem_bound(rep.d, rep.r_min, rep.r_l, r);
  }
  return rep;
}

void certify(Annihilator& a, const Witnesses& witnesses) { a.series = verify_annihilator(a.poly, witnesses); }

SystemSpec sum_product_system(const FieldDesc& field, const std::vector<DPoly>& components, const DPoly& q) {
  if (components.empty()) throw DomainError("closure systems need at least one component");
  std::vector<DPoly> gens;
  for (std::size_t i = 0; i < components.size(); ++i) {
    check_component(components[i], static_cast<std::uint32_t>(i + 1));
    gens.push_back(components[i]);
  }
  check_no_z(q, "Q");
  gens.push_back(dvar(zvar()) - q);
  return SystemSpec(field, std::move(gens), Family::z());
}

SystemSpec rational_system(const FieldDesc& field, const std::vector<DPoly>& components, const DPoly& qn,
                           const DPoly& qd) {
  if (qd.is_zero_poly()) throw DomainError("Q_d must be nonzero");
  if (components.empty()) throw DomainError("closure systems need at least one component");
  std::vector<DPoly> gens;
  for (std::size_t i = 0; i < components.size(); ++i) {
    check_component(components[i], static_cast<std::uint32_t>(i + 1));
    gens.push_back(components[i]);
  }
  check_no_z(qn, "Q_n");
  check_no_z(qd, "Q_d");
  gens.push_back(qd * dvar(zvar()) - qn);
  return SystemSpec(field, std::move(gens), Family::z());
}

SystemSpec composition_system(const FieldDesc& field, const DPoly& p1, const DPoly& p2) {
  check_component(p1, 1);
  check_component(p2, 2);
  const std::uint32_t r1 = order_in(p1, Family::y(1));
  const std::uint32_t r2 = order_in(p2, Family::y(2));
  std::vector<DPoly> gens;
  DPoly cur = p1;
  for (std::uint32_t j = 0; j <= r2; ++j, cur = derive(cur)) gens.push_back(cur);
  cur = p2;
  for (std::uint32_t j = 0; j <= r1; ++j, cur = derive(cur)) gens.push_back(cur);
  cur = dvar(zvar()) - dvar(yvar(1));
  for (std::uint32_t j = 0; j <= r1 + r2; ++j, cur = derive_chain(cur)) gens.push_back(cur);
  return SystemSpec(field, std::move(gens), Family::z(), DerivationMode::kChain);
}

}  // namespace dalg
