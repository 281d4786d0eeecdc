#include <doctest.h>

#include "jetsym/error.hpp"
#include "jetsym/parser.hpp"
#include "jetsym/zero_test.hpp"

using namespace jetsym;

TEST_SUITE("zero_test") {

TEST_CASE("proven zero by canonical form") {
  Context ctx;
  Verdict v = zero_test(ctx, parse("(u1^2 + u*u2) - (u1^2 + u*u2)", ctx));
  CHECK(v.outcome == Outcome::ProvenZero);
  ctx.declare_weierstrass(Expr::parameter("g2"), Expr::parameter("g3"));
  CHECK(zero_test(ctx, parse("wp'(u)^2 - 4*wp(u)^3 + g2*wp(u) + g3", ctx)).outcome == Outcome::ProvenZero);
}

TEST_CASE("nonzero with a witness point") {
  Context ctx;
  Verdict v = zero_test(ctx, parse("u2*u1", ctx));
  REQUIRE(v.outcome == Outcome::NonZero);
  CHECK(v.witness.at("u1") == "1");
  CHECK(v.witness.at("u2") == "1");
  CHECK(v.witness_value == "1");
}

TEST_CASE("sampling alone certifies identities as likely zero") {
  Context ctx;
  ctx.declare_weierstrass(Expr(Rational(4, 7)), Expr(Rational(1, 3)));
  Verdict v = sample_test(ctx, parse("wp'(u)^2*u1 - (4*wp(u)^3 - 4/7*wp(u) - 1/3)*u1", ctx), 30, 7);
  CHECK(v.outcome == Outcome::LikelyZero);
  CHECK(v.trials == 30);
  CHECK(v.seed == 7);
  CHECK(sample_test(ctx, parse("wp'(u) - 1", ctx), 5, 1).outcome == Outcome::NonZero);
}

TEST_CASE("sampled points satisfy declared relations") {
  Context ctx;
  ctx.declare_weierstrass(Expr(Rational(4, 7)), Expr(Rational(1, 3)));
  ctx.declare_quadratic_root("psi", Expr(Rational(2, 3)), Expr(Rational(5, 7)), Expr(Rational(3, 8)));
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    JetPoint p(ctx, rng, i == 0);
    try {
      CHECK(p.evaluate(parse("wp'(u)^2 - 4*wp(u)^3 + 4/7*wp(u) + 1/3", ctx)).is_zero());
      CHECK(p.evaluate(parse("2/3*psi(u)^2 + (3/2*wp(u) + 3/8)*psi(u) + 5/7", ctx)).is_zero());
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
  }
}

TEST_CASE("reproducible from the seed") {
  Context ctx;
  Verdict a = sample_test(ctx, parse("u1^3 - u2*u", ctx), 5, 42);
  Verdict b = sample_test(ctx, parse("u1^3 - u2*u", ctx), 5, 42);
  CHECK(a.witness == b.witness);
  CHECK(a.witness_value == b.witness_value);
}

TEST_CASE("exact evaluation with several surds") {
  Context ctx;
  Verdict v = sample_test(ctx, parse("sqrt(u1^2 + 1)*sqrt(u2^2 + 3) - sqrt((u1^2 + 1)*(u2^2 + 3))", ctx), 20, 0);
  CHECK(v.outcome == Outcome::LikelyZero);
}

TEST_CASE("symbolic outcome agrees with sampling outcome") {
  Context ctx;
  for (const char* text : {"1/(u1 + sqrt(u1^2 + 1)) - sqrt(u1^2 + 1) + u1", "(u + u1)^2 - u^2 - 2*u*u1 - u1^2"}) {
    CHECK(zero_test(ctx, parse(text, ctx)).outcome == Outcome::ProvenZero);
    CHECK(sample_test(ctx, parse(text, ctx), 20, 5).outcome == Outcome::LikelyZero);
  }
}

}  // TEST_SUITE
