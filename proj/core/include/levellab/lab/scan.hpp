#pragma once

#include "levellab/lab/classify.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace levellab::lab {

enum class GapKind { Unknown, NonLevel, Mixed };

std::string to_string(GapKind kind);

/// Maximal run of non-level values strictly between two level values.
/// NonLevel and Mixed gaps contain a certified non-level vector, which
/// contradicts the interval conjecture.
struct Gap {
  std::int64_t from = 0;
  std::int64_t to = 0;
  GapKind kind = GapKind::Unknown;

  bool is_counterexample() const noexcept { return kind != GapKind::Unknown; }
};

struct ScanEntry {
  std::int64_t value = 0;
  Classification classification;
};

struct ScanReport {
  HVector base;
  std::vector<std::size_t> degrees;  // {i} or {i, e-i}
  std::int64_t from = 0;
  std::int64_t to = 0;
  std::vector<ScanEntry> entries;  // ascending value
  std::vector<Gap> gaps;

  bool has_counterexample() const;
};

struct ScanOptions {
  Budget budget;
  std::uint64_t seed = 0;
  poly::PrimeField field;
  /// 0 picks std::thread::hardware_concurrency().
  std::size_t threads = 0;
};

/// Classifies base with entry i replaced by each value in from..to.
ScanReport scan_ic(const HVector& base, std::size_t i, std::int64_t from, std::int64_t to,
                   const ScanOptions& options);

/// Same with entries i and e-i replaced together. Requires h_i = h_{e-i} and
/// 1 <= i <= e/2.
ScanReport scan_gic(const HVector& base, std::size_t i, std::int64_t from, std::int64_t to,
                    const ScanOptions& options);

std::vector<Gap> find_gaps(const std::vector<ScanEntry>& entries);

}  // namespace levellab::lab
