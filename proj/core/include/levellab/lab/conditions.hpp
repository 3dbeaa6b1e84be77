#pragma once

#include "levellab/macaulay/hvector.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace levellab::lab {

/// A necessary condition for leveledness that fails for a given vector.
struct Violation {
  std::string condition;
  std::string detail;
};

/// Names of the necessary conditions, in the order classify checks them:
///   ring-cap             h_i <= C(r+i-1, i)
///   o-sequence           Macaulay growth
///   ci-range             h_{e-1} within the top-degree range of a level algebra
///   derivative-cap       h_i <= t * C(r+e-i-1, e-i)
///   gorenstein-symmetry  type 1 vectors are symmetric
///   stanley-si           type 1 vectors of codimension <= 3 are SI-sequences
const std::vector<std::string>& condition_names();

/// nullopt when `condition` holds for h (or does not apply to it). Throws
/// InvalidArgument for an unknown name.
std::optional<Violation> check_condition(std::string_view condition, const HVector& h);

/// First failing condition in the standard order.
std::optional<Violation> first_violation(const HVector& h);

/// Gorenstein vectors in codimension <= 3 are exactly the SI-sequences.
bool stanley_classification_applies(const HVector& h);

}  // namespace levellab::lab
