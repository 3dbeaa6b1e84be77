#include "levellab/lab/scan.hpp"

#include "levellab/error.hpp"
#include "levellab/rng.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

namespace levellab::lab {

std::string to_string(GapKind kind) {
  switch (kind) {
    case GapKind::Unknown: return "unknown";
    case GapKind::NonLevel: return "non-level";
    case GapKind::Mixed: return "mixed";
  }
  return "unknown";
}

bool ScanReport::has_counterexample() const {
  return std::any_of(gaps.begin(), gaps.end(), [](const Gap& g) { return g.is_counterexample(); });
}

std::vector<Gap> find_gaps(const std::vector<ScanEntry>& entries) {
  std::vector<Gap> gaps;
  std::optional<std::size_t> last_level;
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (entries[k].classification.status != Status::Level) continue;
    if (last_level && k > *last_level + 1) {
      bool any_unknown = false;
      bool any_nonlevel = false;
      for (std::size_t j = *last_level + 1; j < k; ++j) {
        const Status s = entries[j].classification.status;
        any_unknown = any_unknown || s == Status::Unknown;
        any_nonlevel = any_nonlevel || s == Status::NonLevel;
      }
      Gap gap;
      gap.from = entries[*last_level + 1].value;
      gap.to = entries[k - 1].value;
      gap.kind = any_nonlevel ? (any_unknown ? GapKind::Mixed : GapKind::NonLevel)
                              : GapKind::Unknown;
      gaps.push_back(gap);
    }
    last_level = k;
  }
  return gaps;
}

namespace {

ScanReport run_scan(const HVector& base, std::vector<std::size_t> degrees, std::int64_t from,
                    std::int64_t to, const ScanOptions& options) {
  if (from > to) throw InvalidArgument("empty value range " + std::to_string(from) + ".." + std::to_string(to));
  if (from < 1) throw InvalidArgument("h-vector entries must be positive; range starts at " + std::to_string(from));

  ScanReport report;
  report.base = base;
  report.degrees = degrees;
  report.from = from;
  report.to = to;

  std::vector<HVector> vectors;
  for (std::int64_t value = from; value <= to; ++value) {
    HVector h = base;
    for (std::size_t d : degrees) h = h.with_entry(d, value);
    vectors.push_back(std::move(h));
    report.entries.push_back(ScanEntry{value, {}});
  }

  std::size_t threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, vectors.size());

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= vectors.size()) return;
      try {
        const auto value = static_cast<std::uint64_t>(report.entries[k].value);
        report.entries[k].classification =
            classify(vectors[k], options.budget, derive_seed(options.seed, value), options.field);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  report.gaps = find_gaps(report.entries);
  return report;
}

}  // namespace

ScanReport scan_ic(const HVector& base, std::size_t i, std::int64_t from, std::int64_t to,
                   const ScanOptions& options) {
  if (i == 0) throw InvalidArgument("degree 0 is fixed at h_0 = 1");
  if (i > base.socle_degree()) {
    throw InvalidArgument("degree " + std::to_string(i) + " exceeds the socle degree " +
                          std::to_string(base.socle_degree()));
  }
  return run_scan(base, {i}, from, to, options);
}

ScanReport scan_gic(const HVector& base, std::size_t i, std::int64_t from, std::int64_t to,
                    const ScanOptions& options) {
  const std::size_t e = base.socle_degree();
  if (i == 0 || 2 * i > e) {
    throw InvalidArgument("paired degree must lie in 1..floor(e/2), got " + std::to_string(i));
  }
  if (base[i] != base[e - i]) {
    throw InvalidArgument("entries h_" + std::to_string(i) + " and h_" + std::to_string(e - i) +
                          " of the base differ");
  }
  std::vector<std::size_t> degrees{i};
  if (e - i != i) degrees.push_back(e - i);
  return run_scan(base, std::move(degrees), from, to, options);
}

}  // namespace levellab::lab
