#include "levellab/bounds/bounds.hpp"
#include "levellab/construct/constructions.hpp"
#include "levellab/error.hpp"
#include "levellab/inverse/inverse_module.hpp"
#include "levellab/poly/form_io.hpp"
#include "levellab/rng.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace levellab;
using namespace levellab::inverse;
using poly::Form;
using poly::parse_form;

namespace {

InverseModule module_of(std::size_t r, std::uint32_t e, std::vector<const char*> texts) {
  std::vector<Form> gens;
  for (const char* text : texts) gens.push_back(parse_form(text, r));
  return InverseModule(r, e, std::move(gens));
}

InverseModule generic(std::size_t r, std::uint32_t e, std::size_t t, std::uint64_t seed) {
  Rng rng(seed);
  return construct::compressed_generic_module(r, e, t, rng);
}

}  // namespace

TEST_CASE("h-vectors of generic modules") {
  CHECK(h_vector(generic(3, 4, 4, 1)).h == HVector{1, 3, 6, 10, 4});
  CHECK(h_vector(generic(3, 4, 3, 2)).h == HVector{1, 3, 6, 9, 3});
  const auto product = h_vector(module_of(3, 3, {"y1*y2*y3"}));
  CHECK(product.h == HVector{1, 3, 3, 1});
  CHECK(product.dimensions == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(product.independent());
  CHECK(product.to_record().find("h=1,3,3,1") == 0);
}

TEST_CASE("level presentations and type") {
  const auto two = module_of(3, 4, {"y1^4", "y2^4"});
  CHECK(is_level_presentation(two));
  CHECK(type_of(two) == 2);
  const auto dependent = module_of(3, 4, {"y1^4", "2*y1^4"});
  CHECK_FALSE(is_level_presentation(dependent));
  CHECK(type_of(dependent) == 1);
  CHECK_FALSE(h_vector(dependent).independent());
  CHECK(type_of(generic(3, 4, 4, 3)) == 4);
  CHECK_THROWS_AS(module_of(3, 4, {"y1^3"}), InvalidArgument);
}

TEST_CASE("Gorenstein checks") {
  const auto fermat = is_gorenstein(module_of(3, 4, {"y1^4 + y2^4 + y3^4"}));
  CHECK(fermat.gorenstein);
  CHECK(fermat.profile.h == HVector{1, 3, 3, 3, 1});
  CHECK_FALSE(is_gorenstein(module_of(3, 4, {"y1^4", "y2^4"})).gorenstein);
  Rng rng(9);
  const InverseModule five(3, 5, {construct::sum_of_powers(3, 5, 5, rng)});
  CHECK(is_gorenstein(five).profile.h == HVector{1, 3, 5, 5, 3, 1});
}

TEST_CASE("common derivative dimensions") {
  const Form f = parse_form("y1^4", 3);
  const Form g = parse_form("y2^4", 3);
  CHECK(common_derivative_dims(f, g) == std::vector<std::int64_t>{1, 0, 0, 0, 0});
  const Form h = parse_form("y1^4 + y1*y2^2*y3 + y3^4", 3);
  const auto own = h_vector(InverseModule(3, 4, {h})).h;
  const auto same = common_derivative_dims(h, h);
  for (std::size_t i = 0; i <= 4; ++i) CHECK(same[i] == own[i]);
  CHECK_THROWS_AS(common_derivative_dims(f, parse_form("y2^3", 3)), InvalidArgument);
}

TEST_CASE("common derivatives vanish in the upper half for a maximal type 2 module") {
  // D1 realizes (1,3,3,3,1), D2 adds two more powers: the middle entry
  // grows to 5 and the two derivative spaces meet trivially from e/2 on.
  Rng rng(21);
  const Form d1 = construct::sum_of_powers(3, 4, 3, rng);
  const Form d2 = construct::sum_of_powers(3, 4, 2, rng);
  const auto d = common_derivative_dims(d1, d2);
  for (std::size_t i = 2; i <= 4; ++i) CHECK(d[i] == 0);
  CHECK(h_vector(InverseModule(3, 4, {d1, d2})).h == HVector{1, 3, 5, 5, 2});
}

TEST_CASE("generic subquotients") {
  const auto m = generic(3, 4, 3, 4);
  Rng rng(4);
  const auto full = generic_subquotient(m, 3, rng);
  CHECK(h_vector(full.module).h == h_vector(m).h);

  const auto one = generic_subquotient(m, 1, rng);
  CHECK(type_of(one.module) == 1);
  const auto h = h_vector(one.module).h;
  CHECK(h.socle_degree() == 4);
  const auto bound = bounds::za_lower_bound(HVector{1, 3, 6, 9, 3}, 3, 1);
  // (2*h_3 + 2*h_1) / 8 = 24/8
  CHECK(bound.exact[1] == Rational(3));
  CHECK(bound.ceilings[1] == 3);
  CHECK(h[1] >= 3);

  CHECK_THROWS_AS(generic_subquotient(m, 0, rng), InvalidArgument);
  CHECK_THROWS_AS(generic_subquotient(m, 4, rng), InvalidArgument);
}

TEST_CASE("truncation") {
  const auto m = generic(3, 4, 4, 5);
  const auto cut = truncate_level(m, 2);
  CHECK(h_vector(cut).h == HVector{1, 3, 6});
  CHECK(type_of(cut) == 6);
  CHECK(h_vector(truncate_level(m, 4)).h == HVector{1, 3, 6, 10, 4});

  const auto fermat = module_of(3, 4, {"y1^4 + y2^4 + y3^4"});
  const auto level3 = truncate_level(fermat, 3);
  CHECK(h_vector(level3).h == HVector{1, 3, 3, 3});
  CHECK(type_of(level3) == 3);
  CHECK_THROWS_AS(truncate_level(m, 0), InvalidArgument);
  CHECK_THROWS_AS(truncate_level(m, 5), InvalidArgument);
}
