#pragma once

// Named, parameterized fixtures: equations, substitutions, symmetries and
// operators. Fixtures declare the function symbols they need into the
// caller's Context, so one Context can host an equation together with the
// maps that act on it.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "jetsym/diffalg.hpp"
#include "jetsym/psdo.hpp"
#include "jetsym/transform.hpp"

namespace jetsym {

enum class FixtureKind { Equation, Map, Symmetry, Operator };

std::string_view to_string(FixtureKind kind);

struct ParameterSpec {
  std::string name;
  Rational fallback;  // desk-scale default
  bool nonzero = false;
};

struct FixtureInfo {
  std::string name;
  FixtureKind kind;
  std::string anchor;       // short description shown in reports
  std::vector<ParameterSpec> parameters;
  // Maps only.
  std::string source;
  std::string target;
  bool signed_branches = false;
  bool enabled = true;      // false when the target cannot be verified here
};

using ParameterMap = std::map<std::string, Expr>;

struct FixtureKey {
  std::string name;
  ParameterMap parameters;
  // Maps with a sign choice: +1 or -1. Unset means both branches.
  int sign = 0;
};

struct MapBranch {
  std::string label;  // "+", "-" or empty
  Substitution substitution;
};

struct MapFixture {
  const FixtureInfo* info = nullptr;
  std::vector<MapBranch> branches;
};

class Catalog {
 public:
  // With use_defaults false, a parameter absent from the key raises
  // MissingParameter instead of taking its desk-scale default.
  explicit Catalog(bool use_defaults = true);

  const std::vector<FixtureInfo>& list() const { return fixtures_; }
  const FixtureInfo& info(const std::string& name) const;
  bool contains(const std::string& name) const;

  EvolutionEquation equation(Context& ctx, const FixtureKey& key) const;
  MapFixture map(Context& ctx, const FixtureKey& key) const;
  Expr symmetry(Context& ctx, const FixtureKey& key) const;
  PseudoDiffOperator op(Context& ctx, const FixtureKey& key) const;

  // Random nonzero small rationals for the fixture's parameters, rejecting
  // draws that make a declared denominator vanish.
  ParameterMap random_parameters(const std::string& name, std::mt19937_64& rng) const;

 private:
  const FixtureInfo& expect(const std::string& name, FixtureKind kind) const;
  Expr param(const FixtureKey& key, const std::string& name) const;

  bool use_defaults_;
  std::vector<FixtureInfo> fixtures_;
};

// Parameter values parsed from "name=value" strings (values in the grammar).
ParameterMap parse_parameters(const std::vector<std::string>& assignments, const Context& ctx);

}  // namespace jetsym
