#include "dalg/resultant.hpp"

#include <algorithm>

#include "dalg/errors.hpp"

namespace dalg {

namespace {

bool counts_for_total(VarId v) { return v == kXVar || is_jet_var(v); }

std::uint32_t total_degree_xj(const DPoly& lifted) {
  return lifted.is_zero_poly() ? 0 : lifted.total_degree_if(counts_for_total);
}

std::uint32_t family_degree_lifted(const DPoly& lifted, Family f) {
  if (lifted.is_zero_poly()) return 0;
  return lifted.total_degree_if([f](VarId v) { return is_jet_var(v) && JetVar::from_id(v).family == f; });
}

bool free_of_x(const DPoly& p) {
  for (const auto& t : p.terms())
    if (t.coef.contains_var(kXVar)) return false;
  return true;
}

void only_families(const DPoly& p, std::initializer_list<Family> allowed, const char* what) {
  if (p.contains_var(kSVar)) throw DomainError(std::string(what) + " must not contain s");
  for (Family f : families(p))
    if (std::find(allowed.begin(), allowed.end(), f) == allowed.end())
      throw DomainError(std::string(what) + " involves the unexpected family " + f.name());
}

ResultantElimination finish(const DPoly& res, Family target, std::vector<BoundCheck> bounds) {
  ResultantElimination out;
  out.resultant = res;
  out.bounds = std::move(bounds);
  for (const auto& b : out.bounds)
    if (!b.ok())
      throw Error("degree bound " + b.name + " violated: " + std::to_string(b.value) + " > " + b.bound.get_str());
  Annihilator& a = out.annihilator;
  a.poly = normalize_annihilator(res);
  a.target = target;
  a.order = order_in(a.poly, target);
  a.degree = jet_degree(a.poly);
  a.k_searched = a.degree;
  return out;
}

}  // namespace

bool ResultantElimination::bounds_ok() const {
  return std::all_of(bounds.begin(), bounds.end(), [](const BoundCheck& b) { return b.ok(); });
}

DPoly lift_x(const DPoly& p) {
  std::vector<DPoly::Term> out;
  for (const auto& t : p.terms()) {
    if (t.mono.degree(kXVar) > 0) throw DomainError("input is already lifted");
    const BasePoly den = t.coef.denominator();
    if (den.contains_var(kXVar)) throw DomainError("coefficients must be polynomial in x");
    const Coeff inv_den = Coeff(1) / Coeff(den);
    const auto parts = t.coef.numerator().coefficients_in(kXVar);
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (parts[j].is_zero_poly()) continue;
      out.push_back({t.mono * Monomial::var(kXVar, static_cast<std::uint32_t>(j)), Coeff(parts[j]) * inv_den});
    }
  }
  return DPoly::from_terms(std::move(out));
}

DPoly lower_x(const DPoly& p) {
  std::vector<DPoly::Term> out;
  const Coeff x = Coeff::variable(kXVar);
  for (const auto& t : p.terms()) {
    Coeff c = t.coef;
    for (std::uint32_t e = t.mono.degree(kXVar); e > 0; --e) c *= x;
    out.push_back({t.mono.without(kXVar), c});
  }
  return DPoly::from_terms(std::move(out));
}

std::vector<std::vector<DPoly>> sylvester_matrix(const DPoly& p, const DPoly& q, VarId v) {
  const std::size_t m = p.degree(v);
  const std::size_t n = q.degree(v);
  if (m == 0 || n == 0) throw DomainError("resultant needs positive degree in the eliminated variable");
  const auto pc = p.coefficients_in(v);
  const auto qc = q.coefficients_in(v);
  const std::size_t size = m + n;
  std::vector<std::vector<DPoly>> out(size, std::vector<DPoly>(size));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) out[i][i + j] = pc[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) out[n + i][i + j] = qc[n - j];
  return out;
}

DPoly bareiss_determinant(std::vector<std::vector<DPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return DPoly(Coeff(1));
  bool negate = false;
  DPoly prev(Coeff(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero_poly()) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k].is_zero_poly()) ++piv;
      if (piv == n) return DPoly();
      std::swap(m[k], m[piv]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = DPoly();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

DPoly resultant(const DPoly& p, const DPoly& q, VarId v) {
  return lower_x(bareiss_determinant(sylvester_matrix(lift_x(p), lift_x(q), v)));
}

ResultantElimination elim_algebraic(const DPoly& p, const DPoly& qg) {
  only_families(p, {Family::y(1), Family::y(2)}, "P");
  only_families(qg, {Family::y(1)}, "Q_g");
  const VarId y1 = yvar(1);
  if (!p.contains_var(y1)) throw DomainError("P must involve y1");
  if (!qg.contains_var(y1)) throw DomainError("Q_g must involve y1");
  for (VarId v : p.variables())
    if (is_jet_var(v) && JetVar::from_id(v).family == Family::y(1) && v != y1)
      throw DomainError("P may involve y1 but not its derivatives");
  const DPoly lp = lift_x(p);
  const DPoly lq = lift_x(qg);
  const DPoly r = bareiss_determinant(sylvester_matrix(lp, lq, y1));
  if (r.is_zero_poly()) throw HypothesisViolation("the resultant vanishes: Q_g divides P or shares a factor with it");

  const Integer dy1_q = lq.degree(y1);
  const Integer dy1_p = lp.degree(y1);
  std::vector<BoundCheck> b;
  b.push_back({"d_y2", family_degree_lifted(r, Family::y(2)), dy1_q * family_degree_lifted(lp, Family::y(2))});
  b.push_back({"d_x", r.degree(kXVar), lp.degree(kXVar) * dy1_q + dy1_p * lq.degree(kXVar)});
  b.push_back({"d", total_degree_xj(r), total_degree_xj(lp) * dy1_q + dy1_p * total_degree_xj(lq)});
  return finish(lower_x(r), Family::y(2), std::move(b));
}

ResultantElimination elim_hyperexp(const DPoly& p, const Coeff& u, const Coeff& v) {
  only_families(p, {Family::y(1), Family::y(2)}, "P");
  const VarId y1 = yvar(1);
  if (!p.contains_var(y1)) throw DomainError("P is independent of y1: there is nothing to eliminate");
  for (VarId w : p.variables())
    if (is_jet_var(w) && JetVar::from_id(w).family == Family::y(1) && w != y1)
      throw DomainError("P may involve y1 but not its derivatives");
  if (v.is_zero()) throw DomainError("v must be nonzero");
  for (const Coeff* c : {&u, &v}) {
    if (!c->is_polynomial()) throw DomainError("u and v must be polynomials in x");
    for (VarId w : c->numerator().variables())
      if (w != kXVar) throw DomainError("u and v must be polynomials in x");
  }
  if (!u.is_zero() && !gcd(u.numerator(), v.numerator()).is_constant())
    throw DomainError("u and v must be coprime");

  const DPoly dp = derive(p);
  const DPoly p1 = substitute(dp, {{yvar(1, 1), dvar(y1) * dconst(u / v)}}).scaled(v);
  const DPoly lp = lift_x(p);
  const DPoly lp1 = lift_x(p1);
  const DPoly r = bareiss_determinant(sylvester_matrix(lp, lp1, y1));
  if (r.is_zero_poly())
    throw HypothesisViolation(
        "the resultant vanishes: P must be primitive and separable in its top derivative; "
        "apply prepare_primitive_separable first");

  const Integer dy1 = lp.degree(y1);
  const Integer duv = std::max(lift_x(DPoly(u)).degree(kXVar), lift_x(DPoly(v)).degree(kXVar));
  std::vector<BoundCheck> b;
  b.push_back({"d_y2", family_degree_lifted(r, Family::y(2)), 2 * dy1 * family_degree_lifted(lp, Family::y(2))});
  b.push_back({"d_x", r.degree(kXVar), dy1 * (2 * lp.degree(kXVar) + duv)});
  b.push_back({"d", total_degree_xj(r), dy1 * (2 * total_degree_xj(lp) + duv)});
  return finish(lower_x(r), Family::y(2), std::move(b));
}

ResultantElimination elim_x(const DPoly& p) {
  const auto fams = families(p);
  if (fams.size() != 1) throw DomainError("P must involve exactly one family");
  if (p.contains_var(kSVar)) throw DomainError("P must not contain s");
  const Family f = *fams.begin();
  const std::uint32_t r = order_in(p, f);
  const DPoly dp = derive(p);
  const DPoly lp = lift_x(p);
  const Integer dx = lp.degree(kXVar);
  const Integer d = jet_degree(p);

  DPoly out;
  if (free_of_x(dp)) {
    out = dp;
  } else {
    const DPoly r_x = bareiss_determinant(sylvester_matrix(lp, lift_x(dp), kXVar));
    if (r_x.is_zero_poly())
      throw HypothesisViolation(
          "the resultant vanishes: P must be primitive and separable in its top derivative; "
          "apply prepare_primitive_separable first");
    out = lower_x(r_x);
  }
  std::vector<BoundCheck> b;
  b.push_back({"order", order_in(out, f), Integer(r + 1)});
  // P' itself has degree d; the resultant is bounded by 2 d_x d.
  b.push_back({"d", jet_degree(out), free_of_x(dp) ? d : 2 * dx * d});
  return finish(out, f, std::move(b));
}

DPoly prepare_primitive_separable(const DPoly& p, VarId top) {
  if (p.is_zero_poly()) throw DomainError("cannot prepare the zero polynomial");
  if (p.contains_var(kSVar)) throw DomainError("P must not contain s");
  // Normalizing first clears denominators in x.
  const DPoly lp = lift_x(normalize_annihilator(p));
  if (!lp.contains_var(top)) return normalize_annihilator(p);
  const DPoly prim = divide_exact(lp, content_in(lp, top));
  const DPoly g = gcd(prim, prim.partial(top));
  return normalize_annihilator(lower_x(divide_exact(prim, g)));
}

}  // namespace dalg
