#include "dalg/errors.hpp"
#include "dalg/parse.hpp"
#include "dalg/resultant.hpp"
#include "doctest.h"
#include "oracle.hpp"
#include "support.hpp"

using namespace dalg;
using dalg::testing::Gen;

namespace {

const FieldDesc kQ = FieldDesc::rationals();
const FieldDesc kQx = FieldDesc::rational_functions({}, true);

DPoly P(std::string_view s, const FieldDesc& f = kQx) { return parse(s, f); }

bool same_up_to_sign(const DPoly& a, const DPoly& b) { return a == b || a == -b; }

}  // namespace

TEST_CASE("resultant examples") {
  CHECK(resultant(P("y2' - y1"), P("y1^2 - x"), yvar(1)) == P("y2'^2 - x"));
  CHECK(same_up_to_sign(resultant(P("y2 - y1"), P("y2' - 2*x*y1"), yvar(1)), P("y2' - 2*x*y2")));
  CHECK(resultant(P("y1^2 + y2"), P("3*y1^2 + 3*y2"), yvar(1)).is_zero_poly());
  CHECK(same_up_to_sign(resultant(P("y1 - x"), P("x*y1^2 + 1"), kXVar), P("y1^3 + 1")));
  CHECK_THROWS_AS(resultant(P("y2"), P("y1^2 - x"), yvar(1)), DomainError);
  CHECK_THROWS_AS(lift_x(P("y1/x")), DomainError);
  const auto m = sylvester_matrix(lift_x(P("y2' - y1")), lift_x(P("y1^2 - x")), yvar(1));
  CHECK(m.size() == 3);
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
  Gen g(99);
  const std::vector<VarId> vars{yvar(1), yvar(2), kXVar};
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = static_cast<std::size_t>(g.small(1, 4));
    std::vector<std::vector<DPoly>> m(n, std::vector<DPoly>(n));
    for (auto& row : m)
      for (auto& e : row)
        if (g.small(0, 3) != 0) e = g.poly(kQ, vars, 2, 3);
    CHECK(bareiss_determinant(m) == dalg::testing::cofactor_det(m));
  }
}

TEST_CASE("resultant properties") {
  Gen g(2718);
  const std::vector<VarId> coeff_vars{yvar(2), yvar(2, 1)};
  auto random_in_y1 = [&](std::uint32_t deg) {
    std::vector<DPoly> cs;
    for (std::uint32_t j = 0; j <= deg; ++j) cs.push_back(g.poly(kQ, coeff_vars, 1, 2));
    if (cs.back().is_zero_poly()) cs.back() = DPoly(Coeff(1));
    return DPoly::from_coefficients(yvar(1), cs);
  };
  for (int it = 0; it < 200; ++it) {
    const auto dp = static_cast<std::uint32_t>(g.small(1, 2));
    const auto dq = static_cast<std::uint32_t>(g.small(1, 2));
    const auto ds = static_cast<std::uint32_t>(g.small(1, 2));
    const DPoly p = random_in_y1(dp);
    const DPoly q = random_in_y1(dq);
    const DPoly s = random_in_y1(ds);
    const DPoly rpq = resultant(p, q, yvar(1));
    // Res(q, p) = (-1)^{deg p deg q} Res(p, q).
    const DPoly rqp = resultant(q, p, yvar(1));
    CHECK(rqp == ((p.degree(yvar(1)) * q.degree(yvar(1))) % 2 == 0 ? rpq : -rpq));
    CHECK(resultant(p * s, q, yvar(1)) == rpq * resultant(s, q, yvar(1)));
  }
}

TEST_CASE("algebraic elimination") {
  const auto e = elim_algebraic(P("y2' - y1"), P("y1^2 - x"));
  CHECK(e.annihilator.poly == P("y2'^2 - x"));
  CHECK(e.bounds_ok());
  REQUIRE(e.bounds.size() == 3);
  CHECK(e.bounds[0].name == "d_y2");
  CHECK(e.bounds[0].value == 2);
  CHECK(e.bounds[0].bound == 2);
  CHECK(e.bounds[1].value == 1);
  CHECK(e.bounds[1].bound == 1);
  CHECK(e.bounds[2].value == 2);
  CHECK(e.bounds[2].bound == 4);
  // Rational g: the resultant is evaluation at y1 = x.
  const auto r = elim_algebraic(P("y2' - y1*y2"), P("y1 - x"));
  CHECK(r.annihilator.poly == normalize_annihilator(P("y2' - x*y2")));
  CHECK_THROWS_AS(elim_algebraic(P("(y1^2 - x)*y2"), P("y1^2 - x")), HypothesisViolation);
  // Witness: g = sqrt(x) at 1, f = an antiderivative.
  const Series g = solve_ode_series(P("2*y1*y1' - 1", kQ), Family::y(1), {Coeff(1)}, 24, 1);
  const auto cert = verify_annihilator(e.annihilator.poly, {{Family::y(2), integrate(g)}});
  CHECK(cert.certified);
}

TEST_CASE("hyperexponential elimination") {
  const Coeff x = Coeff::variable(kXVar);
  const auto e = elim_hyperexp(P("y2 - y1"), Coeff(2) * x, Coeff(1));
  CHECK(e.annihilator.poly == normalize_annihilator(P("y2' - 2*x*y2")));
  CHECK(e.bounds_ok());
  CHECK(e.bounds[0].bound == 2);
  CHECK(e.bounds[1].bound == 1);
  const Series g = solve_ode_series(P("y1' - 2*x*y1"), Family::y(1), {Coeff(1)}, 24);
  CHECK(verify_annihilator(e.annihilator.poly, {{Family::y(2), g}}).certified);

  // f = exp(x)^2.
  const auto sq = elim_hyperexp(P("y2 - y1^2"), Coeff(1), Coeff(1));
  CHECK(sq.annihilator.poly == normalize_annihilator(P("(y2' - 2*y2)^2")));
  CHECK(prepare_primitive_separable(sq.annihilator.poly, yvar(2, 1)) == P("y2' - 2*y2"));
  CHECK(sq.bounds_ok());

  CHECK_THROWS_AS(elim_hyperexp(P("y2' - y2"), Coeff(1), Coeff(1)), DomainError);
  CHECK_THROWS_AS(elim_hyperexp(P("y2 - y1"), x, x), DomainError);
  // Not separable in y2: the resultant vanishes.
  CHECK_THROWS_AS(elim_hyperexp(P("(y2 - y1)^2"), Coeff(1), Coeff(1)), HypothesisViolation);
}

TEST_CASE("elimination of x") {
  const auto e = elim_x(P("y1 - x^2"));
  CHECK(e.annihilator.poly == normalize_annihilator(P("y1'^2 - 4*y1")));
  CHECK(e.bounds_ok());
  CHECK(e.bounds[1].bound == 4);
  CHECK(verify_annihilator(e.annihilator.poly, {{Family::y(1), Series::of(parse_coeff("x^2", kQx), 12)}}).certified);

  CHECK(elim_x(P("y1' - x")).annihilator.poly == P("y1'' - 1"));
  CHECK(elim_x(P("x*y1 - 1")).annihilator.poly == P("y1' + y1^2"));
  CHECK_THROWS_AS(elim_x(P("(y1 - x)^2")), HypothesisViolation);
}

TEST_CASE("primitive squarefree preparation") {
  const VarId top = yvar(1, 1);
  CHECK(prepare_primitive_separable(P("(y1' - y1)^2"), top) == P("y1' - y1"));
  CHECK(prepare_primitive_separable(P("x*(y1' - y1)"), top) == P("y1' - y1"));
  CHECK(prepare_primitive_separable(P("y1'^2*(y1' - 1)"), top) == P("y1'^2 - y1'"));
  Gen g(31);
  for (int it = 0; it < 200; ++it) {
    const DPoly a = g.poly(kQx, {yvar(1), top}, 2, 3);
    if (!a.contains_var(top)) continue;
    const DPoly b = a * a * g.poly(kQx, {yvar(1), top}, 1, 2);
    if (b.is_zero_poly()) continue;
    const DPoly out = prepare_primitive_separable(b, top);
    CHECK(prepare_primitive_separable(out, top) == out);
    CHECK(jet_degree(out) <= jet_degree(b));
    const DPoly lo = lift_x(out);
    CHECK(gcd(lo, lo.partial(top)).is_constant());
  }
}
