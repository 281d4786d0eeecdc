#pragma once

// Text grammar:
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | power
//   power   := primary ('^' exponent)?
//   exponent:= ('-')? (integer | '(' expr ')')      rational, denominator 1 or 2
//   primary := integer | name | name primes '(' expr ')' | '(' expr ')'
// Names: x, jet variables (u, u1 ... u9, u_10 ...), parameters, and
// declared functions; sqrt(...) is built in.

#include <string>

#include "jetsym/context.hpp"
#include "jetsym/expr.hpp"

namespace jetsym {

// Raises SyntaxError (with line and column) or UnknownSymbol.
Expr parse(const std::string& text, const Context& ctx);

}  // namespace jetsym
