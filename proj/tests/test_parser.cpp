#include <doctest.h>

#include "jetsym/error.hpp"
#include "jetsym/normal_form.hpp"
#include "jetsym/parser.hpp"

using namespace jetsym;

namespace {

ErrorKind kind_of(const std::string& text, const Context& ctx) {
  try {
    parse(text, ctx);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error for " << text);
  return ErrorKind::ManifestError;
}

}  // namespace

TEST_SUITE("parser") {

TEST_CASE("grammar basics") {
  Context ctx;
  Expr kdv = parse("u3 + u*u1", ctx);
  CHECK(kdv == Expr::jet("u", 3) + Expr::jet("u", 0) * Expr::jet("u", 1));
  Expr e = parse("u_10 + 1/2", ctx);
  CHECK(jet_order(e, "u") == 10);
  CHECK(parse("  u1 *  x ", ctx) == Expr::jet("u", 1) * Expr::independent());
}

TEST_CASE("power binds tighter than unary minus") {
  Context ctx;
  CHECK(parse("-u^2", ctx) == -pow(Expr::jet("u", 0), 2));
  CHECK(parse("u^-1", ctx) == pow(Expr::jet("u", 0), -1));
  CHECK(parse("u1^(3/2)", ctx) == Expr::jet("u", 1) * Expr::sqrt(Expr::jet("u", 1)));
}

TEST_CASE("primed functions resolve through declarations") {
  Context ctx;
  ctx.declare_weierstrass(Expr::parameter("g2"), Expr::parameter("g3"));
  CHECK(canonicalize(ctx, parse("wp'(u)^2", ctx)) == canonicalize(ctx, parse("4*wp(u)^3 - g2*wp(u) - g3", ctx)));
  CHECK(parse("wp''(u)", ctx) == parse("6*wp(u)^2 - g2/2", ctx));
  ctx.declare_fresh("a");
  CHECK(to_string(parse("a''(u)", ctx)) == "a''(u)");
}

TEST_CASE("errors carry positions and kinds") {
  Context ctx;
  CHECK(kind_of("u +", ctx) == ErrorKind::SyntaxError);
  CHECK(kind_of("(u1", ctx) == ErrorKind::SyntaxError);
  CHECK(kind_of("u^(1/3)", ctx) == ErrorKind::SyntaxError);
  CHECK(kind_of("foo(u)", ctx) == ErrorKind::UnknownSymbol);
  CHECK(kind_of("u_13", ctx) == ErrorKind::JetOrderOverflow);
  try {
    parse("u1 +\n  * u", ctx);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("line 2, column 3") != std::string::npos);
  }
  ctx.strict_parameters = true;
  CHECK(kind_of("k*u", ctx) == ErrorKind::UnknownSymbol);
  ctx.declare_parameter("k");
  CHECK_NOTHROW(parse("k*u", ctx));
}

TEST_CASE("print then parse is stable") {
  Context ctx;
  ctx.declare_weierstrass(Expr::parameter("g2"), Expr::parameter("g3"));
  ctx.declare_fresh("a");
  for (const char* text : {"u3 + u*u1", "-3/2*u2^2/u1 + k/u1", "sqrt(u1^2 + 1) - u1", "a'(u)*u1^3/(u1 + a(u))",
                           "wp'(u)*u1^3 - 6*wp(u)^2", "exp(v) + exp(-v)", "u_11 - x*u2"}) {
    Expr e = parse(text, ctx);
    std::string once = to_string(e);
    CHECK(to_string(parse(once, ctx)) == once);
  }
}

}  // TEST_SUITE
