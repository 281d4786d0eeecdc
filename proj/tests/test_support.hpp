#pragma once

// Shared helpers for the unit suites: canonical comparison and a random
// expression generator over u-jets.

#include <random>
#include <string>

#include "jetsym/calculus.hpp"
#include "jetsym/normal_form.hpp"
#include "jetsym/parser.hpp"

namespace jetsym::testing {

inline bool same(const Context& ctx, const Expr& a, const Expr& b) {
  return canonicalize(ctx, a - b).is_zero();
}

inline Expr p(const std::string& text, const Context& ctx) { return parse(text, ctx); }

// Random rational functions in u, u1 .. u_{max_order} with small integer
// coefficients. Denominators are kept nonvanishing-free of hidden
// cancellations by adding a positive constant.
class RandomExpr {
 public:
  RandomExpr(std::uint64_t seed, int max_order = 3, std::string dependent = "u")
      : rng_(seed), max_order_(max_order), dep_(std::move(dependent)) {}

  Expr polynomial(int terms = 3, int degree = 2) {
    Expr sum(0L);
    for (int t = 0; t < terms; ++t) {
      Expr mono(coeff());
      int d = 1 + pick(degree);
      for (int i = 0; i < d; ++i) mono = mono * jet();
      sum = sum + mono;
    }
    return sum;
  }

  // Polynomial, or polynomial over (jet^2 + c), optionally with a surd.
  Expr rational() {
    Expr num = polynomial();
    switch (pick(3)) {
      case 0:
        return num;
      case 1:
        return num / (pow(jet(), 2) + Expr(1L + pick(4)));
      default:
        return num + Expr(coeff()) * jet() / (jet() + Expr(1L + pick(4)));
    }
  }

  Expr jet() { return Expr::jet(dep_, pick(max_order_ + 1)); }

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  long coeff() {
    long c = std::uniform_int_distribution<long>(-5, 5)(rng_);
    return c == 0 ? 1 : c;
  }

  std::mt19937_64& rng() { return rng_; }

 private:
  std::mt19937_64 rng_;
  int max_order_;
  std::string dep_;
};

}  // namespace jetsym::testing
