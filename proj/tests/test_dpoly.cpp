#include <sstream>

#include "dalg/errors.hpp"
#include "dalg/parse.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace dalg;
using dalg::testing::Gen;

namespace {

const FieldDesc kQ = FieldDesc::rationals();
const FieldDesc kQx = FieldDesc::rational_functions({}, true);

DPoly P(std::string_view s, const FieldDesc& f = kQ) { return parse(s, f); }

}  // namespace

TEST_CASE("parse builds canonical terms") {
  const DPoly p = P("y1' - y1");
  REQUIRE(p.size() == 2);
  CHECK(p == dvar(yvar(1, 1)) - dvar(yvar(1)));
  CHECK(P("y' - y") == p);
  CHECK(P("y1^(1) - y1") == p);
  CHECK(P("y1^2") == dvar(yvar(1), 2));
  CHECK(P("y1^(2)^2") == dvar(yvar(1, 2), 2));
  CHECK(P("3/2*y2''") == dvar(yvar(2, 2)).scaled(Coeff(Rational(3, 2))));
}

TEST_CASE("two-equation system polynomials") {
  const DPoly p1 = P("y1*y1'' - y1'^2");
  CHECK(p1.size() == 2);
  CHECK(jet_degree(p1) == 2);
  const DPoly p2 = P("(y2-y1)^2 + (y2'-y1')^4");
  CHECK(p2.size() == 8);
  const auto prof = degree_profile(p2);
  CHECK(prof.total_degree == 4);
  CHECK(prof.order.at(Family::y(1)) == 1);
  CHECK(prof.order.at(Family::y(2)) == 1);
  CHECK(order_in(p2, Family::y(3)) == 0);
}

TEST_CASE("parse errors carry positions") {
  auto pos_of = [](std::string_view s, const FieldDesc& f) -> std::size_t {
    try {
      (void)parse(s, f);
    } catch (const ParseError& e) {
      return e.position();
    }
    return ParseError::npos - 1;
  };
  CHECK(pos_of("y1 +* y2", kQ) == 4);
  CHECK(pos_of("2y1", kQ) == 1);
  CHECK(pos_of("y1 y2", kQ) == 3);
  CHECK(pos_of("w + y1", kQ) == 0);
  CHECK(pos_of("x*y1", kQ) == 0);
  CHECK(pos_of("i*y1", kQ) == 0);
  CHECK(pos_of("y1/y2", kQ) == 3);
  CHECK(pos_of("(y1 + 1", kQ) == 7);
  CHECK_THROWS_AS(parse("", kQ), ParseError);
}

TEST_CASE("field descriptors") {
  CHECK(FieldDesc::parse("Q") == kQ);
  CHECK(FieldDesc::parse("Qi").gaussian);
  const FieldDesc f = FieldDesc::parse("Q(a,c;x)");
  CHECK(f.params == std::vector<std::string>{"a", "c"});
  CHECK(f.has_x);
  CHECK(f.to_string() == "Q(a,c;x)");
  CHECK(FieldDesc::parse("Qi(a;)").to_string() == "Qi(a;)");
  CHECK_THROWS_AS(FieldDesc::parse("Q(x;)"), DomainError);
  CHECK_THROWS_AS(FieldDesc::parse("Q(a,a;)"), DomainError);
  CHECK_THROWS_AS(FieldDesc::parse("Q(y2;)"), DomainError);
  CHECK_THROWS_AS(FieldDesc::parse("R"), ParseError);
}

TEST_CASE("derive examples") {
  CHECK(derive(P("y1")) == P("y1'"));
  CHECK(derive(P("y1*y1'' - y1'^2")) == P("y1*y1''' - y1'*y1''"));
  CHECK(derive(P("x*y1", kQx)) == P("y1 + x*y1'", kQx));
  CHECK(derive(P("s*y1")) == P("s*y1'"));
  const FieldDesc fa = FieldDesc::parse("Q(a;x)");
  CHECK(derive(P("a*x^2*y1", fa)) == P("2*a*x*y1 + a*x^2*y1'", fa));
  CHECK(derive(P("1/(x+1)*y1", kQx)) == P("-1/(x^2+2*x+1)*y1 + 1/(x+1)*y1'", kQx));
}

TEST_CASE("derive_chain examples") {
  CHECK(derive_chain(P("z - y1")) == P("z' - y2'*y1'"));
  CHECK(derive_chain(derive_chain(P("z - y1"))) == P("z'' - y2''*y1' - y2'^2*y1''"));
  CHECK(derive_chain(P("y2")) == P("y2'"));
}

TEST_CASE("homogenize") {
  CHECK(homogenize(P("y1' - y1^2")) == P("s*y1' - y1^2"));
  CHECK(homogenize(P("y1' - y1")) == P("y1' - y1"));
  CHECK(homogenize(P("y1 + 1")) == P("y1 + s"));
  const DPoly p = P("y1' - y1^2");
  CHECK(homogenize(derive(p)) == derive(homogenize(p)));
  CHECK(derive(homogenize(p)) == P("s*y1'' - 2*y1*y1'"));
  CHECK(dehomogenize(homogenize(p)) == p);
  CHECK_THROWS_AS(homogenize(DPoly()), DomainError);
  CHECK_THROWS_AS(homogenize(P("s*y1")), DomainError);
}

TEST_CASE("degree profile rejects zero") { CHECK_THROWS_AS(degree_profile(DPoly()), DomainError); }

TEST_CASE("prolong") {
  SystemSpec s(kQ, {P("y1' - y1")});
  const SystemSpec p = prolong(s, 1);
  REQUIRE(p.generators().size() == 2);
  CHECK(p.generators()[1] == P("y1'' - y1'"));
  CHECK(p.order(Family::y(1)) == 2);

  SystemSpec q(kQ, {P("y1*y1'' - y1'^2"), P("(y2-y1)^2 + (y2'-y1')^4")});
  const SystemSpec q1 = prolong(q, 1);
  CHECK(q1.generators().size() == 4);
  CHECK(q1.order(Family::y(1)) == 3);

  SystemSpec c(kQ, {P("z - y1")}, Family::z(), DerivationMode::kChain);
  const SystemSpec c2 = prolong(c, 2);
  REQUIRE(c2.generators().size() == 3);
  CHECK(c2.generators()[2] == P("z'' - y2''*y1' - y2'^2*y1''"));
}

TEST_CASE("system validation") {
  CHECK_THROWS_AS(SystemSpec(kQ, {DPoly()}), DomainError);
  CHECK_THROWS_AS(SystemSpec(kQ, {P("y1")}, Family::z()), DomainError);
  CHECK_THROWS_AS(SystemSpec(kQ, {P("s*y1")}), DomainError);
  CHECK_THROWS_AS(SystemSpec(kQ, {P("x*y1", kQx)}), DomainError);
}

TEST_CASE("substitute") {
  const DPoly hyper = substitute(P("y2' - y1'", kQx), {{yvar(1, 1), P("2*x*y1", kQx)}});
  CHECK(hyper == P("y2' - 2*x*y1", kQx));
  CHECK(substitute(P("s*y1' - y1^2"), {{kSVar, DPoly(Coeff(1))}}) == P("y1' - y1^2"));
  CHECK(substitute(P("z' - z"), {{zvar(0), P("y1+y2")}, {zvar(1), P("y1'+y2'")}}) == P("y1' + y2' - y1 - y2"));
  CHECK_THROWS_AS(substitute(P("y1"), {{yvar(1), P("y1^2")}}), DomainError);
}

TEST_CASE("system files") {
  const SystemFile sf = parse_system_text("# product\nfield: Q\ntarget: z\ny1' - y1\ny2' - y2  # exp\n\nz - y1*y2\n");
  CHECK(sf.generators.size() == 3);
  CHECK(sf.target == Family::z());
  CHECK_THROWS_AS(parse_system_text("field: Q\n"), ParseError);
  CHECK_THROWS_AS(parse_system_text("y1 +\n"), ParseError);
  std::istringstream lib("exp | Q | y' - y | 1\nsqrt | Q | 2*y*y' - 1 | 1 | 1\n");
  const auto ws = parse_witness_library(lib);
  REQUIRE(ws.size() == 2);
  CHECK(ws[1].point == Coeff(1));
  CHECK(ws[0].family == Family::y(1));
}

TEST_CASE("printing round-trips the corpus") {
  const FieldDesc fi = FieldDesc::parse("Qi(a,c;x)");
  const std::vector<std::string> corpus = {
      "y1' - y1", "y1*y1'' - y1'^2", "(y2-y1)^2 + (y2'-y1')^4", "y2'^2 - x", "y2' - 2*x*y2",
      "y'^2 - 4*y", "y' + y^2", "z*z'' - z'^2 - z*z'", "z' - 2*z", "y1' - 1 - y1^2", "-i*y1'^2 + y1",
      "i*y'^2 + y", "(1/2+3*i)*y1^(5)", "y1 - (x + 1)/(x^2 - a)*y1'", "a*c*y3'' - c*x", "s*y1' - y1^2",
      "y1^(12)*z^(4)", "-y1/2", "(c - x)*y1' - 1", "1/4*i*x^2 + a*x - i*a^2"};
  for (const auto& text : corpus) {
    const DPoly p = parse(text, fi);
    const std::string printed = to_string(p, fi);
    CAPTURE(text);
    CAPTURE(printed);
    CHECK(parse(printed, fi) == p);
    CHECK(to_string(parse(printed, fi), fi) == printed);
  }
  CHECK(to_string(P("y1*y1'' - y1'^2"), kQ) == "-y1'^2 + y1*y1''");
}

// ---------------------------------------------------------------------------
// Seeded properties.

namespace {

const std::vector<FieldDesc>& field_kinds() {
  static const std::vector<FieldDesc> kinds = {FieldDesc::rationals(), FieldDesc::gaussian_rationals(),
                                               FieldDesc::parse("Q(a;x)")};
  return kinds;
}

}  // namespace

TEST_CASE("ring axioms on random triples") {
  const auto vars = dalg::testing::jets_of({{1, 2}, {2, 1}});
  for (const auto& f : field_kinds()) {
    Gen g(1001);
    for (int n = 0; n < 200; ++n) {
      const DPoly a = g.poly(f, vars, 3, 4);
      const DPoly b = g.poly(f, vars, 3, 4);
      const DPoly c = g.poly(f, vars, 2, 3);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) - b == a);
    }
  }
}

TEST_CASE("coefficient field axioms") {
  for (const auto& f : field_kinds()) {
    Gen g(77);
    for (int n = 0; n < 200; ++n) {
      const Coeff a = g.coeff(f);
      CHECK((a + (-a)).is_zero());
      if (!a.is_zero()) CHECK((a * (Coeff(1) / a)).is_one());
    }
  }
}

TEST_CASE("derive is a derivation") {
  const auto vars = dalg::testing::jets_of({{1, 2}, {2, 1}});
  for (const auto& f : field_kinds()) {
    Gen g(2024);
    for (int n = 0; n < 200; ++n) {
      const DPoly a = g.poly(f, vars, 3, 4);
      const DPoly b = g.poly(f, vars, 3, 4);
      CHECK(derive(a * b) == derive(a) * b + a * derive(b));
      CHECK(derive_chain(a * b) == derive_chain(a) * b + a * derive_chain(b));
    }
  }
}

TEST_CASE("derive_chain agrees with derive away from y1") {
  const auto vars = dalg::testing::jets_of({{2, 2}, {3, 1}});
  Gen g(5);
  for (int n = 0; n < 200; ++n) {
    const DPoly a = g.poly(kQx, vars, 3, 4);
    CHECK(derive_chain(a) == derive(a));
  }
}

TEST_CASE("homogenize commutes with derive and preserves degree") {
  const auto vars = dalg::testing::jets_of({{1, 2}, {2, 1}});
  for (const auto& f : field_kinds()) {
    Gen g(31337);
    int checked = 0;
    while (checked < 200) {
      const DPoly a = g.poly(f, vars, 4, 5);
      if (jet_degree(a) == 0) continue;
      ++checked;
      CHECK(homogenize(derive(a)) == derive(homogenize(a)));
      CHECK(dehomogenize(homogenize(a)) == a);
      const DPoly da = derive(a);
      if (!da.is_zero_poly() && jet_degree(da) > 0) CHECK(jet_degree(da) == jet_degree(a));
    }
  }
}

TEST_CASE("parse round-trip on random polynomials") {
  const FieldDesc fi = FieldDesc::parse("Qi(a;x)");
  const auto vars = dalg::testing::jets_of({{1, 5}, {2, 1}});
  Gen g(99);
  for (int n = 0; n < 200; ++n) {
    const DPoly a = g.poly(fi, vars, 4, 5);
    CHECK(parse(to_string(a, fi), fi) == a);
  }
}
