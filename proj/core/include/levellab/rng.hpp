#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace levellab {

/// Deterministic generator for all randomized constructions. Built on
/// std::mt19937_64, whose output sequence is fixed by the standard, with
/// rejection sampling instead of std::uniform_int_distribution so that draws
/// are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Child seed for task `index` under `seed` (splitmix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Child seed keyed by a label, e.g. a recipe string.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label) noexcept;

}  // namespace levellab
