#pragma once

#include "levellab/construct/recipe.hpp"
#include "levellab/macaulay/hvector.hpp"
#include "levellab/poly/prime_field.hpp"

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace levellab::lab {

enum class Status { Level, NonLevel, Unknown };

std::string to_string(Status status);
Status status_from_string(const std::string& text);

/// Recipe kind used for certificates backed by the codimension <= 3
/// Gorenstein classification instead of a construction.
inline constexpr const char* kStanleyTheorem = "theorem[stanley-codim3-si]";

inline constexpr const char* kCharP = "char-p";
inline constexpr const char* kChar0 = "char-0-verified";

struct Budget {
  std::size_t trials = 5;
  std::chrono::milliseconds per_vector{10'000};
  /// Re-run the ranks over the rationals and label matching certificates
  /// char-0-verified.
  bool exact_rational = false;
  /// Nesting depth for newvar / truncation searches.
  std::size_t depth = 2;
  /// Recipes whose largest graded piece has more monomials than this are
  /// skipped (dense elimination on them is too slow for a scan).
  std::size_t max_columns = 4000;
};

/// Replayable evidence that h is level. `recipe` is either a construction
/// (realize(recipe, seed, prime) reproduces `generators`) or kStanleyTheorem.
struct Certificate {
  std::string recipe;
  std::uint64_t prime = poly::kDefaultPrime;
  std::uint64_t seed = 0;
  std::size_t r = 0;
  std::uint32_t e = 0;
  /// Canonical forms joined by ';'. Empty for theorem certificates.
  std::string generators;
  std::vector<std::size_t> ranks;
  std::string characteristic = kCharP;
};

struct Classification {
  HVector h;
  Status status = Status::Unknown;
  std::optional<Certificate> certificate;  // Level
  std::string condition;                   // NonLevel
  std::string detail;
  std::size_t trials_used = 0;
  double elapsed_seconds = 0.0;
  std::vector<std::string> diagnostics;
};

/// Necessary conditions first, then a construction search for an exact match,
/// then Unknown. NonLevel is only ever reported from a necessary condition.
Classification classify(const HVector& h, const Budget& budget, std::uint64_t seed,
                        poly::PrimeField field = poly::PrimeField{});

/// Construction recipes tried for h, in search order, each with
/// expected_h(recipe) == h where a closed form exists. Does not include
/// recursive (newvar / truncate) candidates.
std::vector<construct::Recipe> direct_candidates(const HVector& h);

/// Realizes `recipe` with `seed` and packages the result as a certificate.
Certificate make_certificate(const construct::Recipe& recipe, std::uint64_t seed,
                             poly::PrimeField field, bool exact_rational);

std::string join_generators(const std::vector<std::string>& forms);

}  // namespace levellab::lab
