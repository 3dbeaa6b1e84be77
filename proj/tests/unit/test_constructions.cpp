#include "levellab/construct/constructions.hpp"
#include "levellab/construct/recipe.hpp"
#include "levellab/error.hpp"
#include "levellab/inverse/inverse_module.hpp"
#include "levellab/macaulay/macaulay.hpp"
#include "levellab/poly/form_io.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace levellab;
using namespace levellab::construct;
using inverse::h_vector;
using inverse::InverseModule;

namespace {

HVector profile_of(const InverseModule& m) { return h_vector(m).h; }

// min{m, dim R_j, dim R_{e-j}} from Pascal's rule
HVector oracle_powers(int r, int e, int m) {
  std::vector<std::int64_t> h;
  for (int j = 0; j <= e; ++j) {
    const auto a = static_cast<std::int64_t>(oracle::pascal(r + j - 1, j));
    const auto b = static_cast<std::int64_t>(oracle::pascal(r + e - j - 1, e - j));
    h.push_back(std::min<std::int64_t>({m, a, b}));
  }
  return HVector(std::move(h));
}

}  // namespace

TEST_CASE("sums of powers") {
  Rng rng(1);
  const InverseModule one(3, 4, {sum_of_powers(3, 4, 1, rng)});
  CHECK(profile_of(one) == HVector{1, 1, 1, 1, 1});
  CHECK(profile_of(InverseModule(3, 4, {sum_of_powers(3, 4, 5, rng)})) == HVector{1, 3, 5, 3, 1});
  CHECK(profile_of(InverseModule(3, 5, {sum_of_powers(3, 5, 5, rng)})) == HVector{1, 3, 5, 5, 3, 1});
  CHECK(profile_of(InverseModule(3, 4, {sum_of_powers(3, 4, 6, rng)})) == HVector{1, 3, 6, 3, 1});
}

TEST_CASE("closed form for sums of powers") {
  CHECK(expected_h_sum_of_powers(3, 4, 6) == HVector{1, 3, 6, 3, 1});
  CHECK(expected_h_sum_of_powers(5, 6, 1) == HVector{1, 1, 1, 1, 1, 1, 1});
  for (int b = 3; b <= 6; ++b) CHECK(expected_h_sum_of_powers(3, 4, b) == HVector{1, 3, b, 3, 1});
  for (int r = 1; r <= 5; ++r) {
    for (int e = 1; e <= 6; ++e) {
      for (int m = 1; m <= 30; ++m) CHECK(expected_h_sum_of_powers(r, e, m) == oracle_powers(r, e, m));
    }
  }
}

TEST_CASE("augmentation") {
  Rng rng(2);
  const InverseModule base = compressed_generic_module(3, 4, 3, rng);
  REQUIRE(profile_of(base) == HVector{1, 3, 6, 9, 3});
  CHECK(profile_of(augment_with_powers(base, 1, rng)) == HVector{1, 3, 6, 10, 4});
  CHECK(expected_h_augment(HVector{1, 3, 6, 9, 3}, 3, 4, 1) == HVector{1, 3, 6, 10, 4});
  CHECK(expected_h_augment(std::nullopt, 3, 4, 5) == expected_h_sum_of_powers(3, 4, 5));
  CHECK_THROWS_AS(augment_with_powers(base, 13, rng), InvalidArgument);
  CHECK_THROWS_AS(augment_with_powers(base, 0, rng), InvalidArgument);
}

TEST_CASE("adjoining a new variable") {
  const InverseModule cube(1, 3, {poly::parse_form("y1^3", 1)});
  const InverseModule two = add_new_variable_power(cube);
  CHECK(two.r() == 2);
  CHECK(profile_of(two) == HVector{1, 2, 2, 2});
  CHECK(poly::format_form(two.generators().back()) == "y2^3");

  const InverseModule fermat(3, 4, {poly::parse_form("y1^4 + y2^4 + y3^4", 3)});
  CHECK(profile_of(add_new_variable_power(fermat)) == HVector{1, 4, 4, 4, 2});

  Rng rng(3);
  // (1, r-1, a, t-1) -> (1, r, a+1, t)
  const InverseModule base = realize_socle3_partition(3, std::vector<std::size_t>{3, 2}, rng);
  REQUIRE(profile_of(base) == HVector{1, 3, 5, 2});
  CHECK(profile_of(add_new_variable_power(base)) == HVector{1, 4, 6, 3});
}

TEST_CASE("compressed generic modules") {
  Rng rng(4);
  CHECK(profile_of(compressed_generic_module(3, 4, 4, rng)) == HVector{1, 3, 6, 10, 4});
  CHECK(profile_of(compressed_generic_module(2, 3, 2, rng)) == HVector{1, 2, 3, 2});
  CHECK(profile_of(compressed_generic_module(4, 4, 1, rng)) == HVector{1, 4, 10, 4, 1});
  CHECK(expected_h_compressed(2, 3, 2) == HVector{1, 2, 3, 2});
  CHECK(expected_h_compressed(3, 4, 4) == HVector{1, 3, 6, 10, 4});
  CHECK_THROWS_AS(compressed_generic_module(2, 3, 5, rng), InvalidArgument);
}

TEST_CASE("socle degree two") {
  Rng rng(5);
  CHECK(profile_of(realize_socle2(7, 25, rng)) == HVector{1, 7, 25});
  CHECK(profile_of(realize_socle2(4, 10, rng)) == HVector{1, 4, 10});
  CHECK(profile_of(realize_socle2(5, 1, rng)) == HVector{1, 5, 1});
  CHECK_THROWS_AS(realize_socle2(3, 7, rng), InvalidArgument);
}

TEST_CASE("socle degree three partitions") {
  Rng rng(6);
  CHECK(profile_of(realize_socle3_partition(4, std::vector<std::size_t>{4}, rng)) == HVector{1, 4, 4, 1});
  CHECK(profile_of(realize_socle3_partition(4, std::vector<std::size_t>{1, 1, 1}, rng)) ==
        HVector{1, 3, 3, 3});
  const auto parts = greedy_partition(15, 6, 5);
  CHECK(parts == std::vector<std::size_t>{5, 5, 2, 1, 1, 1});
  CHECK(profile_of(realize_socle3_partition(5, parts, rng)) == HVector{1, 5, 15, 6});
  CHECK_THROWS_AS(realize_socle3_partition(3, std::vector<std::size_t>{4}, rng), InvalidArgument);
  CHECK_THROWS_AS(realize_socle3_partition(3, std::vector<std::size_t>{0}, rng), InvalidArgument);
  CHECK_THROWS_AS(realize_socle3_partition(1, std::vector<std::size_t>{1, 1}, rng), InvalidArgument);
  CHECK_THROWS_AS(greedy_partition(40, 6, 5), InvalidArgument);
  CHECK_THROWS_AS(greedy_partition(3, 6, 5), InvalidArgument);
  // the large instance, formula side only
  const std::vector<std::size_t> big = greedy_partition(820, 45, 40);
  CHECK(expected_h_powers_partition(40, 3, big) == HVector{1, 40, 820, 45});
}

TEST_CASE("Gorenstein forms over lifted point sets") {
  Rng rng(7);
  const std::vector<std::int64_t> delta{1, 2, 2, 2};
  CHECK(expected_h_si_points(3, 7, delta) == HVector{1, 3, 5, 7, 7, 5, 3, 1});
  CHECK(profile_of(si_points_module(3, 7, delta, rng)) == HVector{1, 3, 5, 7, 7, 5, 3, 1});
  const std::vector<std::int64_t> wide{1, 2, 3, 2};
  CHECK(profile_of(si_points_module(3, 7, wide, rng)) == HVector{1, 3, 6, 8, 8, 6, 3, 1});
  const std::vector<std::int64_t> line{1, 0, 0};
  CHECK(profile_of(si_points_module(1, 5, line, rng)) == HVector{1, 1, 1, 1, 1, 1});
}

TEST_CASE("best of trials") {
  auto build = [](Rng& rng) { return compressed_generic_module(3, 3, 2, rng); };
  const auto a = best_of_trials(5, 99, build, HVector{1, 3, 6, 2});
  const auto b = best_of_trials(5, 99, build, HVector{1, 3, 6, 2});
  CHECK(a.profile.h == HVector{1, 3, 6, 2});
  CHECK(a.trials_used == 1);
  CHECK(a.seed == b.seed);
  CHECK(a.module.generators() == b.module.generators());
  CHECK_THROWS_AS(best_of_trials(0, 1, build), InvalidArgument);
}

TEST_CASE("recipes") {
  const Recipe r = Recipe::parse("augment[1](compressed[3,4,3])");
  CHECK(r.kind == "augment");
  CHECK(r.params == std::vector<std::int64_t>{1});
  REQUIRE(r.inputs.size() == 1);
  CHECK(r.inputs[0].to_string() == "compressed[3,4,3]");
  CHECK(r.to_string() == "augment[1](compressed[3,4,3])");
  CHECK(Recipe::parse("newvar(powers[2,3,2])").to_string() == "newvar(powers[2,3,2])");
  CHECK(*expected_h(r) == HVector{1, 3, 6, 10, 4});
  CHECK(*expected_h(Recipe::parse("newvar(powers[2,3,2])")) == HVector{1, 3, 3, 2});
  CHECK(*expected_h(Recipe::parse("truncate[3](powers[3,4,3])")) == HVector{1, 3, 3, 3});
  CHECK(*expected_h(Recipe::parse("socle2[7,25]")) == HVector{1, 7, 25});
  CHECK(*expected_h(Recipe::parse("si-points[3,7,1,2,2,2]")) == HVector{1, 3, 5, 7, 7, 5, 3, 1});
  CHECK_FALSE(expected_h(Recipe::parse("quotient[1](compressed[3,4,3])")));

  const auto m1 = realize(r, 42);
  const auto m2 = realize(r, 42);
  CHECK(m1.generators() == m2.generators());
  CHECK(profile_of(m1) == HVector{1, 3, 6, 10, 4});
  CHECK(profile_of(realize(Recipe::parse("quotient[1](compressed[3,4,3])"), 3)).last() == 1);

  CHECK_THROWS_AS(Recipe::parse("powers[3,4"), ParseError);
  CHECK_THROWS_AS(Recipe::parse("powers[3,4,1]x"), ParseError);
  CHECK_THROWS_AS(realize(Recipe::parse("bogus[1]"), 1), InvalidArgument);
  CHECK_THROWS_AS(realize(Recipe::parse("powers[3,4]"), 1), InvalidArgument);
}
