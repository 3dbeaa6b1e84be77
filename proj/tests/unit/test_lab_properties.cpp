#include "levellab/inverse/inverse_module.hpp"
#include "levellab/lab/classify.hpp"
#include "levellab/lab/conditions.hpp"
#include "levellab/lab/scan.hpp"
#include "levellab/lab/store.hpp"
#include "levellab/macaulay/macaulay.hpp"
#include "levellab/rng.hpp"

#include <doctest.h>

using namespace levellab;
using namespace levellab::lab;

namespace {

HVector random_vector(Rng& rng) {
  const std::size_t e = 1 + rng.uniform_below(4);
  const std::int64_t r = 1 + static_cast<std::int64_t>(rng.uniform_below(4));
  std::vector<std::int64_t> h{1, r};
  for (std::size_t j = 2; j <= e; ++j) h.push_back(1 + static_cast<std::int64_t>(rng.uniform_below(12)));
  return HVector(std::move(h));
}

}  // namespace

TEST_CASE("verdicts are sound") {
  Rng rng(4242);
  for (int trial = 0; trial < 150; ++trial) {
    const HVector h = random_vector(rng);
    const auto c = classify(h, Budget{}, rng.next());
    CAPTURE(h.to_string());
    if (c.status == Status::NonLevel) {
      REQUIRE(check_condition(c.condition, h));
    } else if (c.status == Status::Level) {
      REQUIRE(c.certificate);
      const auto record = make_record(c);
      REQUIRE(store_verify(*record).ok);
      REQUIRE(macaulay::is_o_sequence(h));
    }
  }
}

TEST_CASE("more trials never revoke a certificate") {
  Rng rng(4343);
  for (int trial = 0; trial < 40; ++trial) {
    const HVector h = random_vector(rng);
    const std::uint64_t seed = rng.next();
    Budget small;
    small.trials = 1;
    const auto a = classify(h, small, seed);
    if (a.status != Status::Level) continue;
    Budget large;
    large.trials = 8;
    const auto b = classify(h, large, seed);
    REQUIRE(b.status == Status::Level);
  }
}

TEST_CASE("no certified non-level gaps on the settled families") {
  ScanOptions options;
  options.seed = 77;
  // socle degree 2, full type range
  for (std::int64_t r = 1; r <= 6; ++r) {
    const auto report = scan_ic(HVector{1, r, 1}, 2, 1, r * (r + 1) / 2, options);
    for (const auto& e : report.entries) REQUIRE(e.classification.status == Status::Level);
    REQUIRE_FALSE(report.has_counterexample());
  }
  // Gorenstein in codimension 3, socle degree up to 8
  for (std::size_t e = 2; e <= 8; ++e) {
    for (std::size_t i = 1; 2 * i <= e; ++i) {
      std::vector<std::int64_t> base(e + 1, 1);
      for (std::size_t j = 1; j < e; ++j) base[j] = 3;
      const auto report = scan_gic(HVector(base), i, 1, 12, options);
      REQUIRE_FALSE(report.has_counterexample());
    }
  }
}
