#pragma once

#include "levellab/inverse/inverse_module.hpp"
#include "levellab/macaulay/hvector.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace levellab::construct {

/// Replayable description of a construction. Text form is
/// `kind[p1,p2,...](input)`, with `[]` dropped when there are no parameters.
///
///   powers[r,e,m]          sum of m general e-th powers
///   partition[r,e,m1..mt]  t sums of powers
///   compressed[r,e,t]      t dense random forms
///   socle2[r,t]            t sums of r squares
///   socle3[r,m1..mt]       t sums of cubes
///   si-points[r,e,d0..dk]  Gorenstein form over lifted points
///   augment[count](base)   adjoin a sum of `count` powers
///   newvar(base)           adjoin y_{r+1}^e
///   truncate[e'](base)     degree-e' derivatives as new generators
///   quotient[c](base)      c generic combinations of the generators
struct Recipe {
  std::string kind;
  std::vector<std::int64_t> params;
  std::vector<Recipe> inputs;

  std::string to_string() const;
  static Recipe parse(std::string_view text);

  friend bool operator==(const Recipe&, const Recipe&) = default;
};

/// Deterministic given (recipe, seed, field): inputs are realized with
/// derive_seed(seed, 1 + input index).
inverse::InverseModule realize(const Recipe& recipe, std::uint64_t seed,
                               poly::PrimeField field = poly::PrimeField{});

/// Closed-form h-vector when one is known for the recipe (nullopt for generic
/// quotients of non-trivial type).
std::optional<HVector> expected_h(const Recipe& recipe);

}  // namespace levellab::construct
