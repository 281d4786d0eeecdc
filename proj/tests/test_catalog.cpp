#include <doctest.h>

#include <sstream>

#include "jetsym/catalog.hpp"
#include "jetsym/error.hpp"
#include "test_support.hpp"

using namespace jetsym;
using jetsym::testing::p;
using jetsym::testing::same;

namespace {

std::string print(const Expr& e) {
  std::ostringstream out;
  out << e;
  return out.str();
}

// Every expression a fixture instantiates to.
std::vector<Expr> fixture_expressions(const Catalog& catalog, Context& ctx, const FixtureInfo& f) {
  switch (f.kind) {
    case FixtureKind::Equation:
      return {catalog.equation(ctx, {f.name}).rhs};
    case FixtureKind::Map: {
      std::vector<Expr> out;
      for (const auto& b : catalog.map(ctx, {f.name}).branches) out.push_back(b.substitution.phi);
      return out;
    }
    case FixtureKind::Symmetry:
      // The elliptic symmetries reuse the equation's wp declaration.
      if (f.name.rfind("kn_", 0) == 0) catalog.equation(ctx, {"kn"});
      return {catalog.symmetry(ctx, {f.name})};
    case FixtureKind::Operator: {
      std::vector<Expr> out;
      PseudoDiffOperator op = catalog.op(ctx, {f.name});
      for (const auto& c : op.local.coeffs) out.push_back(c);
      for (const auto& t : op.nonlocal) {
        out.push_back(t.left);
        for (const auto& c : t.inner.coeffs) out.push_back(c);
      }
      return out;
    }
  }
  return {};
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("every fixture instantiates with its defaults") {
  Catalog catalog;
  CHECK(catalog.list().size() >= 40);
  for (const auto& f : catalog.list()) {
    CAPTURE(f.name);
    Context ctx;
    CHECK(!f.anchor.empty());
    CHECK_NOTHROW(fixture_expressions(catalog, ctx, f));
    if (f.kind == FixtureKind::Map) {
      CHECK(catalog.contains(f.source));
      if (f.enabled) CHECK(catalog.contains(f.target));
      MapFixture m = catalog.map(ctx, {f.name});
      CHECK(m.branches.size() == (f.signed_branches ? 2u : 1u));
    }
  }
}

TEST_CASE("named examples") {
  Catalog catalog;
  Context ctx;
  EvolutionEquation kdv = catalog.equation(ctx, {"kdv"});
  CHECK(kdv.dependent == "v");
  CHECK(same(ctx, kdv.rhs, p("v3 + v*v1", ctx)));
  EvolutionEquation w = catalog.equation(ctx, {"w_eq"});
  CHECK(same(ctx, w.rhs, p("w3 - 3/2*w2^2/w1", ctx)));
  CHECK(catalog.symmetry(ctx, {"x_translation"}) == p("u1", ctx));
  CHECK(same(ctx, catalog.symmetry(ctx, {"kdv_order5"}), p("v5 + 5/3*v*v3 + 10/3*v1*v2 + 5/6*v^2*v1", ctx)));

  Context kn;
  EvolutionEquation eq = catalog.equation(kn, {"kn", {{"g2", Expr(Rational(4, 7))}, {"g3", Expr(Rational(1, 3))}, {"k", Expr(5L)}}});
  CHECK(eq.order == 3);
  CHECK(same(kn, eq.rhs, p("u3 - 3/2*u2^2/u1 - 3/2*wp(u)*u1^3 + 5/u1", kn)));
  CHECK(canonicalize(kn, p("wp'(u)^2 - 4*wp(u)^3 + 4/7*wp(u) + 1/3", kn)).is_zero());

  Context m;
  MapFixture first = catalog.map(m, {"order2_first", {{"k", Expr(Rational(1, 2))}}});
  REQUIRE(first.branches.size() == 1);
  CHECK(same(m, first.branches[0].substitution.phi, p("u2/sqrt(u1) - 2/3*u1 + 1/2*sqrt(u1)", m)));

  Context c;
  MapFixture cw = catalog.map(c, {"kn_to_kdv_const_wp", {}, 1});
  REQUIRE(cw.branches.size() == 1);
  CHECK(cw.branches[0].label == "+");
  CHECK(cw.branches[0].substitution.order == 3);

  Context cd;
  MapFixture third = catalog.map(cd, {"cd_third_order"});
  CHECK(third.branches.size() == 2);
  CHECK(third.branches[0].substitution.order == 3);
}

TEST_CASE("operators") {
  Catalog catalog;
  Context ctx;
  PseudoDiffOperator l = catalog.op(ctx, {"w_recursion"});
  CHECK(l.nonlocal.size() == 1);
  REQUIRE(l.local.coeffs.size() == 3);
  CHECK(same(ctx, l.local.coeffs[1], p("-2*w2/w1", ctx)));
  CHECK(same(ctx, l.nonlocal[0].left, p("w1", ctx)));
  REQUIRE(l.nonlocal[0].inner.coeffs.size() == 2);
  CHECK(same(ctx, l.nonlocal[0].inner.coeffs[1], p("w3/w1^2 - w2^2/w1^3", ctx)));
  PseudoDiffOperator id = catalog.op(ctx, {"identity"});
  CHECK(id.local.coeffs.size() == 1);
  CHECK(id.nonlocal.empty());
}

TEST_CASE("lookup errors") {
  Catalog catalog;
  Context ctx;
  try {
    catalog.equation(ctx, {"no_such_equation"});
    FAIL("expected UnknownFixture");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownFixture);
  }
  // Asking for a map as an equation is also an unknown fixture.
  CHECK_THROWS_AS(catalog.equation(ctx, {"scaling"}), Error);

  Catalog strict(false);
  try {
    strict.equation(ctx, {"kn", {{"g2", Expr(1L)}}});
    FAIL("expected MissingParameter");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MissingParameter);
  }
  CHECK_NOTHROW(strict.equation(ctx, {"kdv"}));
}

TEST_CASE("parameter relations of the root parametrization") {
  Catalog catalog;
  std::mt19937_64 rng(11);
  for (int i = 0; i < 5; ++i) {
    ParameterMap params = catalog.random_parameters("exp_eq", rng);
    Rational e1 = params.at("e1").value();
    Rational e2 = params.at("e2").value();
    Rational e3 = -e1 - e2;
    Rational a = params.at("A").value();
    Context ctx;
    EvolutionEquation eq = catalog.equation(ctx, {"exp_eq", params});
    Rational b = Rational(9, 64) * (e1 * e1 - 4 * e2 * e3) / a;
    Rational c = Rational(3, 4) * e1;
    Expr expected = p("v3 - 1/8*v1^3", ctx) + (Expr(a) * p("exp(v)", ctx) + Expr(b) * p("exp(-v)", ctx) + Expr(c)) *
                                                 p("v1", ctx);
    CHECK(same(ctx, eq.rhs, expected));

    // wp'^2 = 4 (wp - e1)(wp - e2)(wp - e3) after instantiating a root-parametrized fixture.
    Context roots;
    catalog.equation(roots, {"cd_prime", params});
    Expr wp = p("wp(u)", roots);
    Expr product = Expr(4L) * (wp - Expr(e1)) * (wp - Expr(e2)) * (wp - Expr(e3));
    CHECK(canonicalize(roots, p("wp'(u)^2", roots) - product).is_zero());
    CHECK(e1 + e2 + e3 == 0);
  }
}

TEST_CASE("psi relation") {
  Catalog catalog;
  Context ctx;
  MapFixture m = catalog.map(ctx, {"psi_map"});
  REQUIRE(m.branches.size() == 1);
  // Default roots e1 = 1/2, e2 = -1/3 and A = 2/3 give B = 3/512 and C = 3/8.
  CHECK(canonicalize(ctx, p("2/3*psi(u)^2 + (3/2*wp(u) + 3/8)*psi(u) + 3/512", ctx)).is_zero());
}

TEST_CASE("random parameters") {
  Catalog catalog;
  std::mt19937_64 rng(5);
  ParameterMap kn = catalog.random_parameters("kn", rng);
  CHECK(kn.size() == 3);
  for (const auto& [name, value] : kn) CHECK(!value.is_zero());
  ParameterMap k6 = catalog.random_parameters("kn_to_kdv_tan_corrected", rng);
  CHECK(k6.at("k") == Expr(6L));
  CHECK_THROWS_AS(catalog.random_parameters("missing", rng), Error);
}

TEST_CASE("parameter parsing") {
  Context ctx;
  ParameterMap m = parse_parameters({"g2=4/7", "k=-5"}, ctx);
  CHECK(m.at("g2") == Expr(Rational(4, 7)));
  CHECK(m.at("k") == Expr(-5L));
  CHECK_THROWS_AS(parse_parameters({"g2"}, ctx), Error);
}

TEST_CASE("fixtures round-trip through the text grammar") {
  Catalog catalog;
  for (const auto& f : catalog.list()) {
    CAPTURE(f.name);
    Context ctx;
    for (const Expr& e : fixture_expressions(catalog, ctx, f)) {
      std::string text = print(e);
      Expr back = parse(text, ctx);
      CHECK(same(ctx, back, e));
      CHECK(print(back) == print(parse(print(back), ctx)));
    }
  }
}

}  // TEST_SUITE
