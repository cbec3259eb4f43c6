#include <fstream>

#include "dalg/errors.hpp"
#include "dalg/parse.hpp"
#include "dalg/series.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace dalg;
using dalg::testing::Gen;

namespace {

const FieldDesc kQ = FieldDesc::rationals();

DPoly P(std::string_view s, const FieldDesc& f = kQ) { return parse(s, f); }

Coeff q(long n, long d = 1) { return Coeff(make_rational(n, d)); }

Series exp_series(std::size_t n) { return exp0(Series::t(n)); }

// Reference tan coefficients by long division of the sine and cosine
// series over plain rationals.
std::vector<Rational> tan_reference(std::size_t n) {
  std::vector<Rational> s(n), c(n), t(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Rational inv = Rational(1) / Rational(factorial(k));
    const int sign = (k / 2) % 2 == 0 ? 1 : -1;
    if (k % 2 == 1) s[k] = sign * inv;
    if (k % 2 == 0) c[k] = sign * inv;
  }
  for (std::size_t k = 0; k < n; ++k) {
    Rational acc = s[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= c[j] * t[k - j];
    t[k] = acc / c[0];
  }
  return t;
}

std::vector<WitnessSpec> library() {
  std::ifstream in(DALG_DATA_DIR "/witnesses.txt");
  REQUIRE(in.good());
  return parse_witness_library(in);
}

Series random_series(Gen& g, std::size_t n) {
  std::vector<Coeff> a;
  for (std::size_t k = 0; k < n; ++k) a.push_back(g.rational());
  return Series(std::move(a));
}

}  // namespace

TEST_CASE("series arithmetic examples") {
  const Series e = exp_series(12);
  for (std::size_t k = 0; k < 12; ++k) CHECK(e[k] == Coeff(Rational(1) / Rational(factorial(k))));
  CHECK(derive(e) == e.truncated(11));

  const Series one_minus_t = Series::constant(1, 10) - Series::t(10);
  const Series geo = invert(one_minus_t);
  for (std::size_t k = 0; k < 10; ++k) CHECK(geo[k] == Coeff(1));
  CHECK(geo * one_minus_t == Series::constant(1, 10));

  CHECK(integrate(e, 1).truncated(12) == e);
  CHECK(pow(one_minus_t, 3)[1] == Coeff(-3));
  CHECK(*(Series::t(5) * Series::t(5)).valuation() == 2);
  CHECK_FALSE(Series::constant(0, 4).valuation());
}

TEST_CASE("series precondition errors") {
  CHECK_THROWS_AS(invert(Series::t(5)), DomainError);
  CHECK_THROWS_AS(exp0(Series::constant(1, 5)), DomainError);
  CHECK_THROWS_AS(compose0(exp_series(5), Series::constant(1, 5)), DomainError);
  CHECK_THROWS_AS(Series::t(4) + Series::t(4, 1), DomainError);
  CHECK_THROWS_AS(Series::of(Coeff(1) / Coeff::variable(kXVar), 4), DomainError);
  // y*y' = 1 with y(0) = 0: the leading coefficient vanishes.
  CHECK_THROWS_AS(solve_ode_series(P("y1*y1' - 1"), Family::y(1), {q(0)}, 6), DomainError);
  CHECK_THROWS_AS(solve_ode_series(P("y1'^2 - y1"), Family::y(1), {q(1)}, 6), DomainError);
  CHECK_THROWS_AS(apply_dpoly(P("y2' - y2"), {{Family::y(1), exp_series(6)}}), DomainError);
}

TEST_CASE("field elements expand around a point") {
  const FieldDesc qx = FieldDesc::rational_functions({}, true);
  // 1/(1 + x) at 0.
  const Series a = Series::of(parse_coeff("1/(1+x)", qx), 6);
  for (std::size_t k = 0; k < 6; ++k) CHECK(a[k] == q(k % 2 == 0 ? 1 : -1));
  // x^2 at 1: 1 + 2t + t^2.
  const Series b = Series::of(parse_coeff("x^2", qx), 5, 1);
  CHECK(b.coefficients() == std::vector<Coeff>{q(1), q(2), q(1), q(0), q(0)});
}

TEST_CASE("ode witnesses") {
  const Series e = solve_ode_series(P("y1' - y1"), Family::y(1), {q(1)}, 15);
  CHECK(e == exp_series(15));

  const Series t = solve_ode_series(P("y1' - 1 - y1^2"), Family::y(1), {q(0)}, 16);
  const auto ref = tan_reference(16);
  for (std::size_t k = 0; k < 16; ++k) CHECK(t[k] == Coeff(ref[k]));
  CHECK(t[3] == q(1, 3));
  CHECK(t[5] == q(2, 15));

  const FieldDesc qx = FieldDesc::rational_functions({}, true);
  const Series g = solve_ode_series(P("y1' - 2*x*y1", qx), Family::y(1), {q(1)}, 14);
  for (std::size_t k = 0; k < 14; ++k)
    CHECK(g[k] == (k % 2 == 0 ? Coeff(Rational(1) / Rational(factorial(k / 2))) : q(0)));

  // sqrt(x) at 1: coefficients binomial(1/2, k).
  const Series r = solve_ode_series(P("2*y1*y1' - 1"), Family::y(1), {q(1)}, 8, 1);
  Rational c = 1;
  for (std::size_t k = 0; k < 8; ++k) {
    CHECK(r[k] == Coeff(c));
    c = c * (Rational(1, 2) - Rational(static_cast<long>(k))) / Rational(static_cast<long>(k + 1));
  }
  CHECK(r.point() == q(1));

  // Order two: cos.
  const Series cs = solve_ode_series(P("y1'' + y1"), Family::y(1), {q(1), q(0)}, 10);
  CHECK(cs[2] == q(-1, 2));
  CHECK(cs[4] == q(1, 24));
}

TEST_CASE("library witnesses satisfy their equations") {
  const auto lib = library();
  CHECK(lib.size() >= 6);
  for (const auto& w : lib) {
    CAPTURE(w.name);
    constexpr std::size_t n = 24;
    const Series s = solve_ode_series(w.equation, w.family, w.initial, n, w.point);
    REQUIRE(s.truncation() == n);
    const auto cert = verify_annihilator(w.equation, {{w.family, s}});
    const std::uint32_t r = order_in(w.equation, w.family);
    CHECK(cert.certified);
    CHECK(cert.residual_valuation >= n - r);
  }
}

TEST_CASE("apply_dpoly examples") {
  const Series e = exp_series(20);
  const auto z = apply_dpoly(P("y1' - y1"), {{Family::y(1), e}});
  CHECK(z.is_zero());
  CHECK(z.truncation() == 19);

  // lambda * exp(c x) with symbolic lambda and c.
  const FieldDesc lc = FieldDesc::rational_functions({"lam", "c"}, false);
  std::vector<Coeff> a;
  Coeff cp(1);
  for (std::size_t k = 0; k < 14; ++k) {
    a.push_back(Coeff::variable(param_var(0)) * cp / Coeff(Rational(factorial(k))));
    cp *= Coeff::variable(param_var(1));
  }
  CHECK(apply_dpoly(P("y1*y1'' - y1'^2", lc), {{Family::y(1), Series(a)}}).is_zero());
  CHECK_FALSE(apply_dpoly(P("y1' - y1", lc), {{Family::y(1), Series(a)}}).is_zero());

  const Series t = solve_ode_series(P("y1' - 1 - y1^2"), Family::y(1), {q(0)}, 12);
  const auto res = apply_dpoly(P("y1' - y1"), {{Family::y(1), t}});
  CHECK(*res.valuation() == 0);
}

TEST_CASE("polynomial witnesses of the two-equation example") {
  const FieldDesc qia = FieldDesc::rational_functions({"a"}, true, true);
  for (int k = 0; k < 2; ++k) {
    const std::string sg = k == 0 ? "" : "-";
    const std::string sg1 = k == 0 ? "-" : "";
    const Coeff y = parse_coeff(sg + "1/4*i*x^2 + a*x + " + sg1 + "i*a^2", qia);
    const Series w = Series::of(y, 12);
    const Witnesses ws{{Family::y(1), w}};
    CHECK(apply_dpoly(P("y1^2 + y1'^4", qia), ws).is_zero());
    CHECK(apply_dpoly(P(sg + "i*y1'^2 + y1", qia), ws).is_zero());
    CHECK_FALSE(apply_dpoly(P(sg1 + "i*y1'^2 + y1", qia), ws).is_zero());
  }
}

TEST_CASE("annihilator certification") {
  const Series e = exp_series(20);
  const Witnesses prod{{Family::z(), e * e}};
  const auto c = verify_annihilator(P("z' - 2*z"), prod);
  CHECK(c.certified);
  CHECK(c.residual_valuation >= 19);

  // exp(exp(x) - 1) by composition with a zero constant term.
  const Series ee = exp0(exp_series(24) - Series::constant(1, 24));
  CHECK(ee == compose0(exp_series(24), exp_series(24) - Series::constant(1, 24)));
  const auto c2 = verify_annihilator(P("z*z'' - z'^2 - z*z'"), {{Family::z(), ee}});
  CHECK(c2.certified);
  CHECK(c2.residual_valuation >= 21);

  const auto bad = verify_annihilator(P("z*z'' - z'^2 - 2*z*z'"), {{Family::z(), ee}});
  CHECK_FALSE(bad.certified);
  CHECK(bad.residual_valuation == 0);
  // Homogenized input is dehomogenized first.
  CHECK(verify_annihilator(P("s*z' - 2*s*z"), prod).certified);
}

TEST_CASE("series properties") {
  Gen g(20240611);
  for (int it = 0; it < 200; ++it) {
    const std::size_t n = static_cast<std::size_t>(g.small(2, 12));
    const Series a = random_series(g, n);
    const Series b = random_series(g, n);
    CHECK(derive(a * b) == derive(a) * b.truncated(n - 1) + a.truncated(n - 1) * derive(b));
    CHECK(a * b == b * a);
    CHECK(derive(integrate(a, g.rational())) == a);
    if (!a[0].is_zero()) CHECK(a * invert(a) == Series::constant(1, n));
    // exp turns sums into products.
    Series a0 = a;
    Series b0 = b;
    a0 = a0 - Series::constant(a[0], n);
    b0 = b0 - Series::constant(b[0], n);
    CHECK(exp0(a0 + b0) == exp0(a0) * exp0(b0));
    // compose0 with t is the identity.
    CHECK(compose0(a, Series::t(n)) == a);
  }
}
