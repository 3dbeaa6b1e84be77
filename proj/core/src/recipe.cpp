#include "levellab/construct/recipe.hpp"

#include "levellab/construct/constructions.hpp"
#include "levellab/error.hpp"

#include <cctype>
#include <charconv>

namespace levellab::construct {

using inverse::InverseModule;

std::string Recipe::to_string() const {
  std::string out = kind;
  if (!params.empty()) {
    out += '[';
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(params[i]);
    }
    out += ']';
  }
  for (const Recipe& input : inputs) out += "(" + input.to_string() + ")";
  return out;
}

namespace {

class RecipeParser {
 public:
  explicit RecipeParser(std::string_view text) : text_(text) {}

  Recipe parse_all() {
    Recipe recipe = parse();
    if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input in recipe");
    return recipe;
  }

 private:
  Recipe parse() {
    Recipe recipe;
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected recipe kind");
    recipe.kind = std::string(text_.substr(start, pos_ - start));
    if (pos_ < text_.size() && text_[pos_] == '[') {
      ++pos_;
      while (true) {
        std::int64_t value = 0;
        auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{}) throw ParseError(pos_, "expected integer parameter");
        recipe.params.push_back(value);
        pos_ = static_cast<std::size_t>(end - text_.data());
        if (pos_ < text_.size() && text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (pos_ < text_.size() && text_[pos_] == ']') {
          ++pos_;
          break;
        }
        throw ParseError(pos_, "expected ',' or ']'");
      }
    }
    while (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      recipe.inputs.push_back(parse());
      if (pos_ >= text_.size() || text_[pos_] != ')') throw ParseError(pos_, "expected ')'");
      ++pos_;
    }
    return recipe;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void expect_shape(const Recipe& recipe, std::size_t min_params, bool variadic, std::size_t inputs) {
  const bool params_ok = variadic ? recipe.params.size() >= min_params
                                  : recipe.params.size() == min_params;
  if (!params_ok || recipe.inputs.size() != inputs) {
    throw InvalidArgument("malformed recipe " + recipe.to_string());
  }
  for (std::int64_t p : recipe.params) {
    if (p < 0) throw InvalidArgument("negative parameter in recipe " + recipe.to_string());
  }
}

std::vector<std::size_t> tail_sizes(const Recipe& recipe, std::size_t from) {
  std::vector<std::size_t> out;
  for (std::size_t i = from; i < recipe.params.size(); ++i) {
    out.push_back(static_cast<std::size_t>(recipe.params[i]));
  }
  return out;
}

std::vector<std::int64_t> tail_values(const Recipe& recipe, std::size_t from) {
  return {recipe.params.begin() + static_cast<std::ptrdiff_t>(from), recipe.params.end()};
}

std::size_t param(const Recipe& recipe, std::size_t i) {
  return static_cast<std::size_t>(recipe.params.at(i));
}

std::uint32_t degree_param(const Recipe& recipe, std::size_t i) {
  return static_cast<std::uint32_t>(recipe.params.at(i));
}

// (r, e) of the module a recipe realizes.
std::pair<std::size_t, std::uint32_t> ring_of(const Recipe& recipe) {
  const std::string& kind = recipe.kind;
  if (kind == "powers" || kind == "partition" || kind == "compressed" || kind == "si-points") {
    return {param(recipe, 0), degree_param(recipe, 1)};
  }
  if (kind == "socle2") return {param(recipe, 0), 2};
  if (kind == "socle3") return {param(recipe, 0), 3};
  if (recipe.inputs.size() != 1) throw InvalidArgument("malformed recipe " + recipe.to_string());
  auto [r, e] = ring_of(recipe.inputs[0]);
  if (kind == "newvar") return {r + 1, e};
  if (kind == "truncate") return {r, degree_param(recipe, 0)};
  return {r, e};
}

}  // namespace

Recipe Recipe::parse(std::string_view text) { return RecipeParser(text).parse_all(); }

InverseModule realize(const Recipe& recipe, std::uint64_t seed, poly::PrimeField field) {
  Rng rng(seed);
  auto input = [&](std::size_t i) { return realize(recipe.inputs.at(i), derive_seed(seed, 1 + i), field); };
  const std::string& kind = recipe.kind;
  if (kind == "powers") {
    expect_shape(recipe, 3, false, 0);
    const auto r = param(recipe, 0);
    const auto e = degree_param(recipe, 1);
    return InverseModule(r, e, {sum_of_powers(r, e, param(recipe, 2), rng, field)}, field);
  }
  if (kind == "partition") {
    expect_shape(recipe, 3, true, 0);
    const auto parts = tail_sizes(recipe, 2);
    return powers_partition_module(param(recipe, 0), degree_param(recipe, 1), parts, rng, field);
  }
  if (kind == "compressed") {
    expect_shape(recipe, 3, false, 0);
    return compressed_generic_module(param(recipe, 0), degree_param(recipe, 1), param(recipe, 2),
                                     rng, field);
  }
  if (kind == "socle2") {
    expect_shape(recipe, 2, false, 0);
    return realize_socle2(param(recipe, 0), param(recipe, 1), rng, field);
  }
  if (kind == "socle3") {
    expect_shape(recipe, 2, true, 0);
    const auto parts = tail_sizes(recipe, 1);
    return realize_socle3_partition(param(recipe, 0), parts, rng, field);
  }
  if (kind == "si-points") {
    expect_shape(recipe, 3, true, 0);
    const auto delta = tail_values(recipe, 2);
    return si_points_module(param(recipe, 0), degree_param(recipe, 1), delta, rng, field);
  }
  if (kind == "augment") {
    expect_shape(recipe, 1, false, 1);
    return augment_with_powers(input(0), param(recipe, 0), rng);
  }
  if (kind == "newvar") {
    expect_shape(recipe, 0, false, 1);
    return add_new_variable_power(input(0));
  }
  if (kind == "truncate") {
    expect_shape(recipe, 1, false, 1);
    return inverse::truncate_level(input(0), degree_param(recipe, 0));
  }
  if (kind == "quotient") {
    expect_shape(recipe, 1, false, 1);
    return inverse::generic_subquotient(input(0), param(recipe, 0), rng).module;
  }
  throw InvalidArgument("unknown recipe kind '" + kind + "'");
}

std::optional<HVector> expected_h(const Recipe& recipe) {
  const std::string& kind = recipe.kind;
  if (kind == "powers") {
    expect_shape(recipe, 3, false, 0);
    return expected_h_sum_of_powers(param(recipe, 0), degree_param(recipe, 1), param(recipe, 2));
  }
  if (kind == "partition") {
    expect_shape(recipe, 3, true, 0);
    const auto parts = tail_sizes(recipe, 2);
    return expected_h_powers_partition(param(recipe, 0), degree_param(recipe, 1), parts);
  }
  if (kind == "compressed") {
    expect_shape(recipe, 3, false, 0);
    return expected_h_compressed(param(recipe, 0), degree_param(recipe, 1), param(recipe, 2));
  }
  if (kind == "socle2") {
    expect_shape(recipe, 2, false, 0);
    const std::vector<std::size_t> parts(param(recipe, 1), param(recipe, 0));
    return expected_h_powers_partition(param(recipe, 0), 2, parts);
  }
  if (kind == "socle3") {
    expect_shape(recipe, 2, true, 0);
    const auto parts = tail_sizes(recipe, 1);
    return expected_h_powers_partition(param(recipe, 0), 3, parts);
  }
  if (kind == "si-points") {
    expect_shape(recipe, 3, true, 0);
    const auto delta = tail_values(recipe, 2);
    return expected_h_si_points(param(recipe, 0), degree_param(recipe, 1), delta);
  }
  if (kind == "augment") {
    expect_shape(recipe, 1, false, 1);
    auto base = expected_h(recipe.inputs[0]);
    if (!base) return std::nullopt;
    const auto [r, e] = ring_of(recipe.inputs[0]);
    return expected_h_augment(base, r, e, param(recipe, 0));
  }
  if (kind == "newvar") {
    expect_shape(recipe, 0, false, 1);
    auto base = expected_h(recipe.inputs[0]);
    if (!base) return std::nullopt;
    std::vector<std::int64_t> h(base->entries().begin(), base->entries().end());
    for (std::size_t j = 1; j < h.size(); ++j) ++h[j];
    return HVector(std::move(h));
  }
  if (kind == "truncate") {
    expect_shape(recipe, 1, false, 1);
    auto base = expected_h(recipe.inputs[0]);
    if (!base) return std::nullopt;
    return base->prefix(degree_param(recipe, 0));
  }
  if (kind == "quotient") {
    expect_shape(recipe, 1, false, 1);
    auto base = expected_h(recipe.inputs[0]);
    if (base && static_cast<std::size_t>(base->last()) == param(recipe, 0)) return base;
    return std::nullopt;
  }
  throw InvalidArgument("unknown recipe kind '" + kind + "'");
}

}  // namespace levellab::construct
