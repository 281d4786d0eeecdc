#include <doctest.h>

#include "jetsym/catalog.hpp"
#include "jetsym/error.hpp"
#include "jetsym/transform.hpp"
#include "test_support.hpp"

using namespace jetsym;
using jetsym::testing::p;
using jetsym::testing::same;

TEST_SUITE("transform") {

TEST_CASE("substitution validation") {
  Context ctx;
  Substitution s = Substitution::make(ctx, "u", "v", p("u2 - u1^2/6", ctx));
  CHECK(s.order == 2);
  CHECK_THROWS_AS(Substitution::make(ctx, "u", "u", p("u1", ctx)), Error);
  CHECK_THROWS_AS(Substitution::make(ctx, "u", "v", p("v1 + u", ctx)), Error);
  // Top jet cancels: the map is of order 1, not 2.
  CHECK(Substitution::make(ctx, "u", "v", p("u2 - u2 + u1", ctx)).order == 1);
}

TEST_CASE("explicit maps") {
  Context ctx;
  EvolutionEquation kdv = EvolutionEquation::make(ctx, "v", p("v3 + v*v1", ctx));
  EvolutionEquation source = EvolutionEquation::make(ctx, "u", p("u3 - u1^3/18 + k/2*u1^2", ctx));
  Substitution s = Substitution::make(ctx, "u", "v", p("u2 - u1^2/6 + k*u1", ctx));
  CHECK(pushforward_residual(ctx, s, source, kdv).verdict.outcome == Outcome::ProvenZero);

  EvolutionEquation scaled = EvolutionEquation::make(ctx, "v", p("v3 + 1/lambda*v*v1", ctx));
  EvolutionEquation kdv_u = EvolutionEquation::make(ctx, "u", p("u3 + u*u1", ctx));
  CHECK(pushforward_residual(ctx, Substitution::make(ctx, "u", "v", p("lambda*u", ctx)), kdv_u, scaled)
            .verdict.outcome == Outcome::ProvenZero);

  EvolutionEquation airy_u = EvolutionEquation::make(ctx, "u", p("u3", ctx));
  EvolutionEquation airy_v = EvolutionEquation::make(ctx, "v", p("v3", ctx));
  CHECK(pushforward_residual(ctx, Substitution::make(ctx, "u", "v", p("u1", ctx)), airy_u, airy_v)
            .verdict.outcome == Outcome::ProvenZero);
  Residual bad = pushforward_residual(ctx, Substitution::make(ctx, "u", "v", p("u", ctx)), kdv_u, airy_v);
  CHECK(bad.verdict.outcome == Outcome::NonZero);
  CHECK(same(ctx, bad.expression, p("u*u1", ctx)));
}

TEST_CASE("point maps") {
  Context ctx;
  EvolutionEquation kdv = EvolutionEquation::make(ctx, "u", p("u3 + u*u1", ctx));
  EvolutionEquation same_eq = point_pushforward(ctx, p("u", ctx), kdv, "w");
  CHECK(same(ctx, same_eq.rhs, p("w3 + w*w1", ctx)));

  Bindings closure{{p("u", ctx), p("(w - 1)/2", ctx)}};
  EvolutionEquation moved = point_pushforward(ctx, p("2*u + 1", ctx), kdv, "w", closure);
  CHECK(same(ctx, moved.rhs, p("w3 + (w - 1)/2*w1", ctx)));
  // Affine maps are inverted without a closure.
  CHECK(same(ctx, point_pushforward(ctx, p("2*u + 1", ctx), kdv, "w").rhs, moved.rhs));
  CHECK_THROWS_AS(point_pushforward(ctx, p("u^3", ctx), kdv, "w"), NotClosedFormError);
}

TEST_CASE("point map with a free function derives the w-equation") {
  Context ctx;
  Catalog catalog;
  EvolutionEquation source = catalog.equation(ctx, {"kn_free"});
  CHECK(same(ctx, source.rhs, p("u3 - 3/2*u2^2/u1 - 3/2*f(u)*u1^3", ctx)));
  ctx.declare_fresh("phi");
  try {
    point_pushforward(ctx, p("phi(u)", ctx), source, "w");
    FAIL("expected NotClosedForm");
  } catch (const NotClosedFormError& e) {
    // The residual vanishes exactly when f is the rescaled Schwarzian of phi.
    Bindings b{{p("f(u)", ctx), p("-2/3*(phi'''(u)/phi'(u) - 3/2*(phi''(u)/phi'(u))^2)", ctx)}};
    CHECK(canonicalize(ctx, substitute(e.residual(), b)).is_zero());
    CHECK(same(ctx, substitute(e.rhs(), b), p("w3 - 3/2*w2^2/w1", ctx)));
  }
}

TEST_CASE("point functoriality") {
  Context ctx;
  EvolutionEquation src = EvolutionEquation::make(ctx, "u", p("u3 + u^2*u1 + u2/(u1 + 3)", ctx));
  // w = 3u - 2, v = w/5 + 1 and the composite v = 3/5 u + 3/5.
  EvolutionEquation mid = point_pushforward(ctx, p("3*u - 2", ctx), src, "w", {{p("u", ctx), p("(w + 2)/3", ctx)}});
  EvolutionEquation two = point_pushforward(ctx, p("w/5 + 1", ctx), mid, "v", {{p("w", ctx), p("5*(v - 1)", ctx)}});
  EvolutionEquation one =
      point_pushforward(ctx, p("3/5*u + 3/5", ctx), src, "v", {{p("u", ctx), p("(5*v - 3)/3", ctx)}});
  CHECK(same(ctx, one.rhs, two.rhs));
}

TEST_CASE("implicit relations") {
  Context ctx;
  EvolutionEquation kdv = EvolutionEquation::make(ctx, "u", p("u3 + u*u1", ctx));
  EvolutionEquation scaled = EvolutionEquation::make(ctx, "v", p("v3 + 1/lambda*v*v1", ctx));
  EvolutionEquation airy = EvolutionEquation::make(ctx, "v", p("v3", ctx));
  CHECK(implicit_invariance_residual(ctx, {p("v - lambda*u", ctx), p("v", ctx)}, kdv, scaled).verdict.outcome ==
        Outcome::ProvenZero);
  CHECK(implicit_invariance_residual(ctx, {p("v - u", ctx), p("v", ctx)}, kdv, airy).verdict.outcome ==
        Outcome::NonZero);
  // The eliminated variable must be a target jet.
  CHECK_THROWS_AS(implicit_invariance_residual(ctx, {p("v - lambda*u", ctx), p("u", ctx)}, kdv, scaled), Error);
  CHECK_THROWS_AS(implicit_invariance_expression(ctx, {p("v^2 - u", ctx), p("v", ctx)}, kdv, airy), Error);
}

TEST_CASE("explicit and implicit paths agree on a second-order map") {
  Context ctx;
  Catalog catalog;
  MapFixture m = catalog.map(ctx, {"order2_second"});
  EvolutionEquation src = catalog.equation(ctx, {m.info->source});
  EvolutionEquation dst = catalog.equation(ctx, {m.info->target});
  const Substitution& s = m.branches.at(0).substitution;
  Residual explicit_r = pushforward_residual(ctx, s, src, dst);
  Expr relation = Expr::jet(s.target, 0) - s.phi;
  Residual implicit_r = implicit_invariance_residual(ctx, {relation, Expr::jet(s.target, 0)}, src, dst);
  CHECK(explicit_r.verdict.outcome == Outcome::ProvenZero);
  CHECK(implicit_r.verdict.outcome == Outcome::ProvenZero);
}

TEST_CASE("prolongation consistency") {
  Context ctx;
  Expr phi = p("u2 - u1^2/6 + u*u1", ctx);
  Expr vk = phi;
  for (int k = 0; k < 4; ++k) {
    Expr next = total_x_derivative(ctx, vk);
    CHECK(same(ctx, next, total_derivative(ctx, phi, k + 1)));
    vk = next;
  }
}

TEST_CASE("renaming") {
  Context ctx;
  CHECK(rename_jets(p("u3 + u*u1", ctx), "u", "v") == p("v3 + v*v1", ctx));
  EvolutionEquation eq = rename_dependent(ctx, EvolutionEquation::make(ctx, "u", p("u3 + u*u1", ctx)), "w");
  CHECK(eq.dependent == "w");
  CHECK(eq.rhs == p("w3 + w*w1", ctx));
}

}  // TEST_SUITE
