#include "levellab/error.hpp"
#include "levellab/inverse/inverse_module.hpp"
#include "levellab/lab/classify.hpp"
#include "levellab/lab/conditions.hpp"
#include "levellab/lab/scan.hpp"
#include "levellab/lab/store.hpp"
#include "levellab/poly/form_io.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace levellab;
using namespace levellab::lab;

namespace {

Classification run(const HVector& h, std::uint64_t seed = 5) { return classify(h, Budget{}, seed); }

HVector replayed_h(const Certificate& cert) {
  std::vector<poly::Form> gens;
  std::stringstream in(cert.generators);
  std::string text;
  while (std::getline(in, text, ';')) {
    gens.push_back(poly::parse_form(text, cert.r, poly::PrimeField(cert.prime), cert.e));
  }
  return inverse::h_vector(inverse::InverseModule(cert.r, cert.e, gens, poly::PrimeField(cert.prime))).h;
}

ScanEntry entry(std::int64_t value, Status status) {
  ScanEntry e;
  e.value = value;
  e.classification.status = status;
  return e;
}

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name)
      : path((std::filesystem::temp_directory_path() / name).string()) {
    std::filesystem::remove(path);
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("necessary conditions") {
  CHECK(check_condition("ring-cap", HVector{1, 2, 4})->condition == "ring-cap");
  CHECK(check_condition("o-sequence", HVector{1, 3, 5, 8, 8, 5, 3, 1})->detail ==
        "growth 2->3: 8 exceeds bound 7");
  CHECK(check_condition("ci-range", HVector{1, 3, 6, 10, 3})->detail == "h_3 = 10 > r*t = 9");
  CHECK(check_condition("ci-range", HVector{1, 3, 3, 5}));
  CHECK(check_condition("derivative-cap", HVector{1, 3, 6, 10, 15, 2}));
  CHECK(check_condition("gorenstein-symmetry", HVector{1, 3, 4, 1}));
  CHECK(check_condition("stanley-si", HVector{1, 3, 2, 3, 1}));
  CHECK_FALSE(check_condition("stanley-si", HVector{1, 5, 2, 5, 1}));
  CHECK_FALSE(first_violation(HVector{1, 3, 6, 10, 4}));
  CHECK(first_violation(HVector{1, 3, 6, 10, 3})->condition == "ci-range");
  CHECK_THROWS_AS(check_condition("nonsense", HVector{1, 2}), InvalidArgument);
  CHECK(condition_names().size() == 6);
}

TEST_CASE("classification of the socle-4 triple in three variables") {
  const auto a = run(HVector{1, 3, 6, 10, 4});
  REQUIRE(a.status == Status::Level);
  CHECK(replayed_h(*a.certificate) == HVector{1, 3, 6, 10, 4});
  const auto b = run(HVector{1, 3, 6, 9, 3});
  REQUIRE(b.status == Status::Level);
  CHECK(replayed_h(*b.certificate) == HVector{1, 3, 6, 9, 3});
  const auto c = run(HVector{1, 3, 6, 10, 3});
  CHECK(c.status == Status::NonLevel);
  CHECK(c.condition == "ci-range");
  CHECK_FALSE(c.certificate);
}

TEST_CASE("small classifications") {
  for (int e = 0; e <= 6; ++e) {
    const HVector ones(std::vector<std::int64_t>(static_cast<std::size_t>(e) + 1, 1));
    CHECK(run(ones).status == Status::Level);
  }
  CHECK(run(HVector{1, 3, 3, 3}).status == Status::Level);
  CHECK(run(HVector{1, 3, 4, 5}).certificate->recipe == "newvar(compressed[2,3,4])");
  CHECK(run(HVector{1, 3, 5, 8, 8, 5, 3, 1}).condition == "o-sequence");
  const auto big = run(HVector{1, 24, 20, 24, 1});
  CHECK(big.status == Status::Unknown);
  CHECK_FALSE(big.diagnostics.empty());
}

TEST_CASE("exact rational upgrade") {
  Budget budget;
  budget.exact_rational = true;
  const auto c = classify(HVector{1, 3, 6, 10, 4}, budget, 3);
  REQUIRE(c.certificate);
  CHECK(c.certificate->characteristic == kChar0);
  CHECK(classify(HVector{1, 3, 6, 10, 4}, Budget{}, 3).certificate->characteristic == kCharP);
}

TEST_CASE("codimension 3 Gorenstein vectors without a construction use the classification") {
  // (1,3,3,...) SI-sequences are decided without computation when the
  // budget allows no realization at all
  Budget none;
  none.per_vector = std::chrono::milliseconds(-1);
  const auto c = classify(HVector{1, 3, 5, 7, 7, 5, 3, 1}, none, 1);
  REQUIRE(c.status == Status::Level);
  CHECK(c.certificate->recipe == kStanleyTheorem);
  CHECK(classify(HVector{1, 4, 5, 4, 1}, none, 1).status == Status::Unknown);
}

TEST_CASE("certificates replay") {
  const auto c = run(HVector{1, 4, 6, 7});
  REQUIRE(c.certificate);
  const auto again = make_certificate(construct::Recipe::parse(c.certificate->recipe),
                                      c.certificate->seed, poly::PrimeField(c.certificate->prime),
                                      false);
  CHECK(again == *c.certificate);
  CHECK(run(HVector{1, 4, 6, 7}).certificate == c.certificate);
}

TEST_CASE("gap detection") {
  CHECK(find_gaps({entry(1, Status::Level), entry(2, Status::Level)}).empty());
  const auto unknown = find_gaps({entry(1, Status::Level), entry(2, Status::Unknown), entry(3, Status::Level)});
  REQUIRE(unknown.size() == 1);
  CHECK(unknown[0].kind == GapKind::Unknown);
  CHECK_FALSE(unknown[0].is_counterexample());
  const auto bad = find_gaps({entry(1, Status::Level), entry(2, Status::NonLevel), entry(3, Status::NonLevel),
                              entry(4, Status::Level)});
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].kind == GapKind::NonLevel);
  CHECK(bad[0].from == 2);
  CHECK(bad[0].to == 3);
  const auto mixed = find_gaps({entry(1, Status::Level), entry(2, Status::NonLevel), entry(3, Status::Unknown),
                                entry(4, Status::Level), entry(5, Status::Unknown), entry(6, Status::Level)});
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0].kind == GapKind::Mixed);
  CHECK(mixed[1].kind == GapKind::Unknown);
  // runs at the ends are not gaps
  CHECK(find_gaps({entry(1, Status::NonLevel), entry(2, Status::Level), entry(3, Status::Unknown)}).empty());
}

TEST_CASE("single-entry scans") {
  ScanOptions options;
  options.seed = 8;
  const auto socle3 = scan_ic(HVector{1, 3, 3, 3}, 2, 3, 6, options);
  REQUIRE(socle3.entries.size() == 4);
  for (const auto& e : socle3.entries) CHECK(e.classification.status == Status::Level);
  CHECK(socle3.gaps.empty());

  const auto socle2 = scan_ic(HVector{1, 3, 1}, 2, 1, 6, options);
  for (const auto& e : socle2.entries) CHECK(e.classification.status == Status::Level);

  const auto single = scan_ic(HVector{1, 3, 6, 10, 4}, 3, 10, 10, options);
  CHECK(single.entries.size() == 1);
  CHECK(single.gaps.empty());

  const auto top = scan_ic(HVector{1, 3, 6, 10, 4}, 4, 1, 5, options);
  CHECK(top.entries[0].classification.status == Status::NonLevel);
  CHECK(top.entries[3].classification.status == Status::Level);

  CHECK_THROWS_AS(scan_ic(HVector{1, 3, 3}, 0, 1, 2, options), InvalidArgument);
  CHECK_THROWS_AS(scan_ic(HVector{1, 3, 3}, 3, 1, 2, options), InvalidArgument);
  CHECK_THROWS_AS(scan_ic(HVector{1, 3, 3}, 2, 0, 2, options), InvalidArgument);
  CHECK_THROWS_AS(scan_ic(HVector{1, 3, 3}, 2, 4, 2, options), InvalidArgument);
}

TEST_CASE("paired scans") {
  ScanOptions options;
  options.seed = 9;
  const auto pair = scan_gic(HVector{1, 3, 5, 7, 7, 5, 3, 1}, 2, 5, 6, options);
  CHECK(pair.degrees == std::vector<std::size_t>{2, 5});
  REQUIRE(pair.entries.size() == 2);
  CHECK(pair.entries[1].classification.h == HVector{1, 3, 6, 7, 7, 6, 3, 1});
  for (const auto& e : pair.entries) CHECK(e.classification.status == Status::Level);

  const auto middle = scan_gic(HVector{1, 3, 3, 3, 1}, 2, 3, 6, options);
  CHECK(middle.degrees == std::vector<std::size_t>{2});
  for (const auto& e : middle.entries) {
    REQUIRE(e.classification.status == Status::Level);
    CHECK(e.classification.certificate->recipe == "powers[3,4," + std::to_string(e.value) + "]");
  }
  CHECK_THROWS_AS(scan_gic(HVector{1, 3, 6, 10, 4}, 1, 3, 4, options), InvalidArgument);
  CHECK_THROWS_AS(scan_gic(HVector{1, 3, 3, 3, 1}, 3, 3, 4, options), InvalidArgument);
}

TEST_CASE("scan results do not depend on the thread count") {
  ScanOptions one;
  one.seed = 10;
  one.threads = 1;
  ScanOptions many = one;
  many.threads = 4;
  const auto a = scan_ic(HVector{1, 4, 1}, 2, 1, 10, one);
  const auto b = scan_ic(HVector{1, 4, 1}, 2, 1, 10, many);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    CHECK(a.entries[k].classification.certificate == b.entries[k].classification.certificate);
  }
}

TEST_CASE("store round trip and verification") {
  TempFile file("levellab-test-store.jsonl");
  const auto level = make_record(run(HVector{1, 3, 6, 10, 4}));
  const auto nonlevel = make_record(run(HVector{1, 3, 6, 10, 3}));
  Budget none;
  none.per_vector = std::chrono::milliseconds(-1);
  const auto theorem = make_record(classify(HVector{1, 3, 4, 4, 3, 1}, none, 2));
  REQUIRE(level);
  REQUIRE(nonlevel);
  REQUIRE(theorem);
  CHECK_FALSE(make_record(run(HVector{1, 24, 20, 24, 1})));

  store_append(file.path, *level);
  store_append(file.path, *nonlevel);
  store_append(file.path, *theorem);
  const auto all = store_load(file.path);
  REQUIRE(all.size() == 3);
  CHECK(all[0] == *level);
  CHECK(all[1] == *nonlevel);
  CHECK(all[2] == *theorem);
  for (const auto& record : all) CHECK(store_verify(record).ok);

  StoreFilter only_level;
  only_level.status = Status::Level;
  CHECK(store_load(file.path, only_level).size() == 2);
  StoreFilter by_h;
  by_h.h = HVector{1, 3, 6, 10, 3};
  CHECK(store_load(file.path, by_h).size() == 1);

  auto tampered = *level;
  tampered.certificate->generators += "+y1^4";
  CHECK_FALSE(store_verify(tampered).ok);
  auto wrong_seed = *level;
  wrong_seed.certificate->seed += 1;
  CHECK_FALSE(store_verify(wrong_seed).ok);
  auto wrong_condition = *nonlevel;
  wrong_condition.condition = "o-sequence";
  CHECK_FALSE(store_verify(wrong_condition).ok);
}

TEST_CASE("store errors") {
  CHECK_THROWS_AS(store_load("/nonexistent/dir/store.jsonl"), IoError);
  TempFile file("levellab-test-bad.jsonl");
  {
    std::ofstream out(file.path);
    out << "{\"schema\":1}\n";
  }
  CHECK_THROWS_AS(store_load(file.path), ParseError);
  {
    std::ofstream out(file.path);
    out << "not json\n";
  }
  CHECK_THROWS_AS(store_load(file.path), ParseError);
  CHECK_THROWS_AS(from_line("{\"schema\":2}"), InvalidArgument);
}
