#pragma once

// Exact randomized zero testing: canonical form first, then evaluation at
// random rational jet points, with constrained symbols solved in a
// multi-quadratic extension.

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <unordered_map>

#include "jetsym/context.hpp"
#include "jetsym/expr.hpp"
#include "jetsym/field.hpp"
#include "jetsym/normal_form.hpp"

namespace jetsym {

enum class Outcome { ProvenZero, LikelyZero, NonZero };

std::string_view to_string(Outcome o);

struct Verdict {
  Outcome outcome = Outcome::ProvenZero;
  // Assignment (symbol -> printed value) at which the expression is nonzero.
  std::map<std::string, std::string> witness;
  std::string witness_value;
  int trials = 0;
  std::uint64_t seed = 0;
  // Set when the canonical path was skipped or aborted.
  std::string note;

  bool zero() const { return outcome != Outcome::NonZero; }
};

// A sampled point of the jet space. Values of free symbols are drawn on
// first use; constrained function values are solved from their relations.
class JetPoint {
 public:
  JetPoint(const Context& ctx, std::mt19937_64& rng, bool all_ones);

  FieldElem evaluate(const Expr& e);

  // Values actually drawn or solved, printed.
  std::map<std::string, std::string> assignment() const;
  const SurdTower& tower() const { return tower_; }

 private:
  FieldElem eval_node(const Expr& e);
  Rational draw();
  FieldElem function_value(const Expr& app, const FieldElem& arg);

  const Context& ctx_;
  std::mt19937_64& rng_;
  bool all_ones_;
  SurdTower tower_;
  std::map<std::string, FieldElem> symbols_;
  std::unordered_map<const Node*, std::pair<Expr, FieldElem>> memo_;
};

struct ZeroTestOptions {
  int trials = 20;
  std::uint64_t seed = 0;
  Budget budget{};
  bool symbolic = true;  // try the canonical form before sampling
};

// Raises DegenerateSampling when no valid point can be drawn.
Verdict zero_test(const Context& ctx, const Expr& e, const ZeroTestOptions& options = {});

// Sampling only (no canonical form), used when the caller needs a cheap
// independent check.
Verdict sample_test(const Context& ctx, const Expr& e, int trials, std::uint64_t seed);

}  // namespace jetsym
