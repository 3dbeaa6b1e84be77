#include "levellab/lab/classify.hpp"

#include "levellab/construct/constructions.hpp"
#include "levellab/error.hpp"
#include "levellab/inverse/inverse_module.hpp"
#include "levellab/lab/conditions.hpp"
#include "levellab/macaulay/macaulay.hpp"
#include "levellab/poly/form_io.hpp"
#include "levellab/poly/span.hpp"
#include "levellab/rng.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <set>

namespace levellab::lab {

using construct::Recipe;

std::string to_string(Status status) {
  switch (status) {
    case Status::Level: return "level";
    case Status::NonLevel: return "non-level";
    case Status::Unknown: return "unknown";
  }
  return "unknown";
}

Status status_from_string(const std::string& text) {
  if (text == "level") return Status::Level;
  if (text == "non-level") return Status::NonLevel;
  if (text == "unknown") return Status::Unknown;
  throw InvalidArgument("unknown status '" + text + "'");
}

std::string join_generators(const std::vector<std::string>& forms) {
  std::string out;
  for (std::size_t i = 0; i < forms.size(); ++i) {
    if (i) out += ';';
    out += forms[i];
  }
  return out;
}

namespace {

constexpr std::int64_t kHuge = std::numeric_limits<std::int64_t>::max() / 4;

// dim R_j in r variables, saturated at kHuge.
std::int64_t ring_dim(std::int64_t r, std::int64_t j) {
  const BigInt d = macaulay::ring_dimension(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(j));
  return d > kHuge ? kHuge : static_cast<std::int64_t>(d);
}

Recipe leaf(std::string kind, std::vector<std::int64_t> params) {
  return Recipe{std::move(kind), std::move(params), {}};
}

bool expected_matches(const Recipe& recipe, const HVector& h) {
  try {
    auto expected = construct::expected_h(recipe);
    return expected && *expected == h;
  } catch (const Error&) {
    return false;
  }
}

// Non-increasing parts m_1 >= ... >= m_t with expected_h_powers_partition == h.
// Tries larger parts first, so the first hit is the lexicographically greatest.
std::optional<std::vector<std::size_t>> find_partition(const HVector& h, std::size_t node_limit) {
  const auto r = h.codimension();
  const auto e = static_cast<std::int64_t>(h.socle_degree());
  const auto t = static_cast<std::size_t>(h.last());
  std::vector<std::int64_t> dim(e + 1), cap(e + 1), sums(e + 1, 0);
  std::int64_t largest = 1;
  for (std::int64_t j = 0; j <= e; ++j) {
    dim[j] = ring_dim(r, j);
    cap[j] = std::min(dim[j], ring_dim(r, e - j));
    largest = std::max(largest, cap[j]);
  }
  std::vector<std::size_t> parts;
  std::size_t nodes = 0;

  std::function<bool(std::int64_t)> search = [&](std::int64_t max_part) -> bool {
    if (parts.size() == t) {
      for (std::int64_t j = 0; j <= e; ++j) {
        const bool ok = h[j] < dim[j] ? sums[j] == h[j] : sums[j] >= dim[j];
        if (!ok) return false;
      }
      return true;
    }
    const auto remaining = static_cast<std::int64_t>(t - parts.size() - 1);
    for (std::int64_t m = max_part; m >= 1; --m) {
      if (++nodes > node_limit) return false;
      bool feasible = true;
      for (std::int64_t j = 0; j <= e; ++j) {
        const std::int64_t add = std::min(m, cap[j]);
        const std::int64_t total = sums[j] + add;
        if (h[j] < dim[j] && total > h[j]) feasible = false;
        if (total + remaining * add < std::min(h[j], dim[j])) feasible = false;
      }
      // Smaller parts only add less, so no smaller m can reach the targets.
      bool too_small = false;
      for (std::int64_t j = 0; j <= e; ++j) {
        const std::int64_t add = std::min(m, cap[j]);
        if (sums[j] + (remaining + 1) * add < std::min(h[j], dim[j])) too_small = true;
      }
      if (too_small) return false;
      if (!feasible) continue;
      for (std::int64_t j = 0; j <= e; ++j) sums[j] += std::min(m, cap[j]);
      parts.push_back(static_cast<std::size_t>(m));
      if (search(m)) return true;
      parts.pop_back();
      for (std::int64_t j = 0; j <= e; ++j) sums[j] -= std::min(m, cap[j]);
    }
    return false;
  };

  if (search(largest)) return parts;
  return std::nullopt;
}

Recipe partition_recipe(const HVector& h, const std::vector<std::size_t>& parts) {
  const auto r = h.codimension();
  const auto e = h.socle_degree();
  const bool within_r = std::all_of(parts.begin(), parts.end(),
                                    [&](std::size_t m) { return static_cast<std::int64_t>(m) <= r; });
  const bool all_r = std::all_of(parts.begin(), parts.end(),
                                 [&](std::size_t m) { return static_cast<std::int64_t>(m) == r; });
  if (e == 2 && all_r) return leaf("socle2", {r, h.last()});
  std::vector<std::int64_t> params{r};
  if (e == 3 && within_r) {
    for (auto m : parts) params.push_back(static_cast<std::int64_t>(m));
    return leaf("socle3", std::move(params));
  }
  params.push_back(static_cast<std::int64_t>(e));
  for (auto m : parts) params.push_back(static_cast<std::int64_t>(m));
  return leaf("partition", std::move(params));
}

void push_unique(std::vector<Recipe>& out, std::set<std::string>& seen, Recipe recipe) {
  if (seen.insert(recipe.to_string()).second) out.push_back(std::move(recipe));
}

std::vector<Recipe> candidates(const HVector& h, std::size_t depth) {
  std::vector<Recipe> out;
  std::set<std::string> seen;
  for (Recipe& recipe : direct_candidates(h)) push_unique(out, seen, std::move(recipe));
  if (depth == 0) return out;

  const std::size_t e = h.socle_degree();
  const std::int64_t r = h.codimension();

  // Adjoining y_r^e to a module in r-1 variables raises every entry by one.
  bool all_at_least_two = e >= 1 && r >= 2;
  for (std::size_t j = 1; j <= e && all_at_least_two; ++j) all_at_least_two = h[j] >= 2;
  if (all_at_least_two) {
    std::vector<std::int64_t> lowered(h.entries().begin(), h.entries().end());
    for (std::size_t j = 1; j <= e; ++j) --lowered[j];
    const HVector smaller(std::move(lowered));
    if (!first_violation(smaller)) {
      for (Recipe& base : candidates(smaller, depth - 1)) {
        push_unique(out, seen, Recipe{"newvar", {}, {std::move(base)}});
      }
    }
  }

  // h as the truncation of a Gorenstein vector of socle degree e' in (e, 2e].
  for (std::size_t top = e + 1; top <= 2 * e; ++top) {
    std::vector<std::int64_t> g(top + 1);
    bool consistent = true;
    for (std::size_t j = 0; j <= top; ++j) {
      const std::size_t mirror = top - j;
      if (j <= e && mirror <= e && h[j] != h[mirror]) consistent = false;
      g[j] = j <= e ? h[j] : h[mirror];
    }
    if (!consistent) continue;
    const HVector extension(std::move(g));
    if (first_violation(extension)) continue;
    for (Recipe& base : candidates(extension, depth - 1)) {
      push_unique(out, seen,
                  Recipe{"truncate", {static_cast<std::int64_t>(e)}, {std::move(base)}});
    }
  }
  return out;
}

std::int64_t largest_piece(const HVector& h) {
  std::int64_t largest = 1;
  for (std::size_t j = 0; j < h.size(); ++j) {
    largest = std::max(largest, ring_dim(h.codimension(), static_cast<std::int64_t>(j)));
  }
  return largest;
}

}  // namespace

std::vector<Recipe> direct_candidates(const HVector& h) {
  std::vector<Recipe> out;
  std::set<std::string> seen;
  auto consider = [&](Recipe recipe) {
    if (expected_matches(recipe, h)) push_unique(out, seen, std::move(recipe));
  };

  const auto e = static_cast<std::int64_t>(h.socle_degree());
  const std::int64_t t = h.last();
  if (e == 0) {
    consider(leaf("powers", {1, 0, 1}));
    return out;
  }
  const std::int64_t r = h.codimension();
  const std::int64_t top_dim = ring_dim(r, e);

  if (t == 1) {
    consider(leaf("powers", {r, e, h[static_cast<std::size_t>(e / 2)]}));
    if (macaulay::is_si_sequence(h)) {
      std::vector<std::int64_t> params{r, e};
      for (std::int64_t d : macaulay::first_difference(h)) params.push_back(d);
      consider(leaf("si-points", std::move(params)));
    }
  }
  if (t <= top_dim) consider(leaf("compressed", {r, e, t}));
  if (t >= 2) {
    if (auto parts = find_partition(h, 200'000)) consider(partition_recipe(h, *parts));
    if (t - 1 <= top_dim) {
      std::int64_t largest = 1;
      for (std::int64_t j = 0; j <= e; ++j) {
        largest = std::max(largest, std::min(ring_dim(r, j), ring_dim(r, e - j)));
      }
      const std::int64_t max_count = std::min(largest, top_dim - (t - 1));
      for (std::int64_t m = 1; m <= max_count; ++m) {
        consider(Recipe{"augment", {m}, {leaf("compressed", {r, e, t - 1})}});
      }
    }
  }
  return out;
}

Certificate make_certificate(const Recipe& recipe, std::uint64_t seed, poly::PrimeField field,
                             bool exact_rational) {
  const inverse::InverseModule module = construct::realize(recipe, seed, field);
  Certificate cert;
  cert.recipe = recipe.to_string();
  cert.prime = field.modulus();
  cert.seed = seed;
  cert.r = module.r();
  cert.e = module.e();
  std::vector<std::string> forms;
  for (const poly::Form& f : module.generators()) forms.push_back(poly::format_form(f));
  cert.generators = join_generators(forms);
  cert.ranks = poly::derivative_dimensions(module.generators());
  if (exact_rational) {
    auto rational = poly::rational_derivative_dimensions(module.generators());
    if (rational && *rational == cert.ranks) cert.characteristic = kChar0;
  }
  return cert;
}

Classification classify(const HVector& h, const Budget& budget, std::uint64_t seed,
                        poly::PrimeField field) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  Classification out;
  out.h = h;
  auto finish = [&]() {
    out.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return out;
  };

  if (auto violation = first_violation(h)) {
    out.status = Status::NonLevel;
    out.condition = violation->condition;
    out.detail = violation->detail;
    return finish();
  }

  const std::size_t trials = std::max<std::size_t>(budget.trials, 1);
  const auto largest = largest_piece(h);
  const auto recipes = largest > static_cast<std::int64_t>(budget.max_columns)
                           ? std::vector<Recipe>{}
                           : candidates(h, budget.depth);
  if (recipes.empty() && largest > static_cast<std::int64_t>(budget.max_columns)) {
    out.diagnostics.push_back("ring too large for dense elimination (" + std::to_string(largest) +
                              " monomials)");
  }

  for (const Recipe& recipe : recipes) {
    if (Clock::now() - start > budget.per_vector) {
      out.diagnostics.push_back("time budget exhausted before " + recipe.to_string());
      break;
    }
    const std::string name = recipe.to_string();
    const std::uint64_t recipe_seed = derive_seed(seed, name);
    std::optional<HVector> best;
    for (std::size_t k = 0; k < trials; ++k) {
      const std::uint64_t trial_seed = derive_seed(recipe_seed, k);
      inverse::HProfile profile;
      try {
        profile = inverse::h_vector(construct::realize(recipe, trial_seed, field));
      } catch (const InvalidArgument& ex) {
        out.diagnostics.push_back(name + ": " + ex.what());
        break;
      }
      ++out.trials_used;
      if (profile.h == h && profile.independent()) {
        out.status = Status::Level;
        out.certificate = make_certificate(recipe, trial_seed, field, budget.exact_rational);
        return finish();
      }
      if (!best || profile.h > *best) best = profile.h;
    }
    if (best) out.diagnostics.push_back(name + ": reached " + best->to_string());
  }

  if (stanley_classification_applies(h)) {
    Certificate cert;
    cert.recipe = kStanleyTheorem;
    cert.prime = field.modulus();
    cert.seed = seed;
    cert.r = static_cast<std::size_t>(h.codimension());
    cert.e = static_cast<std::uint32_t>(h.socle_degree());
    cert.ranks.assign(h.entries().begin(), h.entries().end());
    cert.characteristic = kChar0;
    out.status = Status::Level;
    out.certificate = std::move(cert);
    return finish();
  }

  out.status = Status::Unknown;
  return finish();
}

}  // namespace levellab::lab
