#include "levellab/construct/constructions.hpp"

#include "levellab/bigint.hpp"
#include "levellab/error.hpp"
#include "levellab/macaulay/macaulay.hpp"

#include <algorithm>
#include <numeric>

namespace levellab::construct {

using inverse::InverseModule;
using macaulay::ring_dimension;
using poly::Form;
using poly::PrimeField;

namespace {

std::int64_t min_with_dim(const BigInt& value, std::size_t r, std::uint32_t degree) {
  const BigInt dim = ring_dimension(r, degree);
  return to_int64(value < dim ? value : dim);
}

}  // namespace

Form sum_of_powers(std::size_t r, std::uint32_t e, std::size_t m, Rng& rng, PrimeField field) {
  if (m < 1) throw InvalidArgument("sum_of_powers needs at least one linear form");
  Form sum(r, e, field);
  for (std::size_t p = 0; p < m; ++p) sum += poly::power(poly::random_linear_form(r, rng, field), e);
  return sum;
}

HVector expected_h_sum_of_powers(std::size_t r, std::uint32_t e, std::size_t m) {
  if (m < 1) throw InvalidArgument("sum of powers needs m >= 1");
  std::vector<std::int64_t> h;
  for (std::uint32_t j = 0; j <= e; ++j) {
    BigInt value = m;
    value = std::min(value, ring_dimension(r, j));
    value = std::min(value, ring_dimension(r, e - j));
    h.push_back(to_int64(value));
  }
  return HVector(std::move(h));
}

InverseModule augment_with_powers(const InverseModule& base, std::size_t count, Rng& rng) {
  const BigInt room = ring_dimension(base.r(), base.e()) - inverse::type_of(base);
  if (count < 1 || count > room) {
    throw InvalidArgument("augmentation count " + std::to_string(count) + " outside 1.." +
                          room.str());
  }
  std::vector<Form> gens = base.generators();
  gens.push_back(sum_of_powers(base.r(), base.e(), count, rng, base.field()));
  return InverseModule(base.r(), base.e(), std::move(gens), base.field());
}

HVector expected_h_augment(const std::optional<HVector>& base, std::size_t r, std::uint32_t e,
                           std::size_t count) {
  const HVector added = expected_h_sum_of_powers(r, e, count);
  if (!base) return added;
  if (base->socle_degree() != e) {
    throw InvalidArgument("base h-vector has socle degree " + std::to_string(base->socle_degree()) +
                          ", expected " + std::to_string(e));
  }
  std::vector<std::int64_t> h{1};
  for (std::uint32_t i = 1; i <= e; ++i) {
    h.push_back(min_with_dim(BigInt((*base)[i]) + added[i], r, i));
  }
  return HVector(std::move(h));
}

InverseModule add_new_variable_power(const InverseModule& base) {
  const std::size_t r = base.r() + 1;
  std::vector<Form> gens;
  gens.reserve(base.generators().size() + 1);
  for (const Form& g : base.generators()) gens.push_back(g.embedded(r));
  gens.push_back(Form::variable_power(r, r - 1, base.e(), base.field()));
  return InverseModule(r, base.e(), std::move(gens), base.field());
}

InverseModule compressed_generic_module(std::size_t r, std::uint32_t e, std::size_t t, Rng& rng,
                                        PrimeField field) {
  if (t < 1 || t > ring_dimension(r, e)) {
    throw InvalidArgument("compressed module type " + std::to_string(t) + " outside 1.." +
                          ring_dimension(r, e).str());
  }
  std::vector<Form> gens;
  for (std::size_t k = 0; k < t; ++k) gens.push_back(poly::random_form(r, e, rng, field));
  return InverseModule(r, e, std::move(gens), field);
}

HVector expected_h_compressed(std::size_t r, std::uint32_t e, std::size_t t) {
  std::vector<std::int64_t> h;
  for (std::uint32_t i = 0; i <= e; ++i) {
    h.push_back(min_with_dim(BigInt(t) * ring_dimension(r, e - i), r, i));
  }
  return HVector(std::move(h));
}

InverseModule powers_partition_module(std::size_t r, std::uint32_t e,
                                      std::span<const std::size_t> parts, Rng& rng,
                                      PrimeField field) {
  if (parts.empty()) throw InvalidArgument("partition needs at least one part");
  if (parts.size() > ring_dimension(r, e)) {
    throw InvalidArgument(std::to_string(parts.size()) + " forms of degree " + std::to_string(e) +
                          " cannot be independent in " + std::to_string(r) + " variables");
  }
  for (std::size_t m : parts) {
    if (m < 1) throw InvalidArgument("partition parts must be positive");
  }
  std::vector<Form> gens;
  for (std::size_t m : parts) gens.push_back(sum_of_powers(r, e, m, rng, field));
  return InverseModule(r, e, std::move(gens), field);
}

HVector expected_h_powers_partition(std::size_t r, std::uint32_t e,
                                    std::span<const std::size_t> parts) {
  if (parts.empty()) throw InvalidArgument("partition needs at least one part");
  std::vector<std::int64_t> h;
  for (std::uint32_t j = 0; j <= e; ++j) {
    const BigInt cap = std::min(ring_dimension(r, j), ring_dimension(r, e - j));
    BigInt total = 0;
    for (std::size_t m : parts) total += std::min(BigInt(m), cap);
    h.push_back(min_with_dim(total, r, j));
  }
  return HVector(std::move(h));
}

InverseModule realize_socle2(std::size_t r, std::size_t t, Rng& rng, PrimeField field) {
  if (t < 1 || t > ring_dimension(r, 2)) {
    throw InvalidArgument("socle-degree-2 type " + std::to_string(t) + " outside 1.." +
                          ring_dimension(r, 2).str());
  }
  const std::vector<std::size_t> parts(t, r);
  return powers_partition_module(r, 2, parts, rng, field);
}

InverseModule realize_socle3_partition(std::size_t r, std::span<const std::size_t> parts, Rng& rng,
                                       PrimeField field) {
  for (std::size_t m : parts) {
    if (m < 1 || m > r) {
      throw InvalidArgument("part " + std::to_string(m) + " outside 1.." + std::to_string(r));
    }
  }
  return powers_partition_module(r, 3, parts, rng, field);
}

std::vector<std::size_t> greedy_partition(std::size_t total, std::size_t count,
                                          std::size_t max_part) {
  if (count == 0 || max_part == 0 || total < count || total > count * max_part) {
    throw InvalidArgument("no partition of " + std::to_string(total) + " into " +
                          std::to_string(count) + " parts in 1.." + std::to_string(max_part));
  }
  std::vector<std::size_t> parts;
  std::size_t remaining = total;
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t left = count - k - 1;  // each later part needs at least 1
    const std::size_t part = std::min(max_part, remaining - left);
    parts.push_back(part);
    remaining -= part;
  }
  return parts;
}

namespace {

bool lex_less(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Degree-j monomials in n variables, each as an exponent vector.
std::vector<std::vector<std::uint32_t>> exponent_vectors(std::size_t n, std::uint32_t j) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto& m : poly::monomials_of_degree(n, j)) out.push_back(m.exponents());
  return out;
}

}  // namespace

InverseModule si_points_module(std::size_t r, std::uint32_t e, std::span<const std::int64_t> delta,
                               Rng& rng, PrimeField field) {
  if (delta.empty() || delta[0] != 1) throw InvalidArgument("point data must start with 1");
  if (!macaulay::is_o_sequence(delta)) {
    throw InvalidArgument("first difference " + to_string(delta) + " is not an O-sequence");
  }
  const std::size_t n = r - 1;
  // The order ideal: in each degree, the delta_j lex-smallest monomials.
  std::vector<std::vector<std::uint32_t>> ideal;
  for (std::uint32_t j = 0; j < delta.size(); ++j) {
    if (delta[j] == 0) continue;
    if (n == 0) {
      if (j > 0) throw InvalidArgument("codimension 1 admits only a single point");
      ideal.emplace_back();
      continue;
    }
    auto monos = exponent_vectors(n, j);
    if (static_cast<std::size_t>(delta[j]) > monos.size()) {
      throw InvalidArgument("first difference entry exceeds the monomial count");
    }
    std::sort(monos.begin(), monos.end(), lex_less);
    ideal.insert(ideal.end(), monos.begin(), monos.begin() + delta[j]);
  }
  std::uint32_t max_exponent = 0;
  for (const auto& a : ideal) {
    for (std::uint32_t x : a) max_exponent = std::max(max_exponent, x);
  }
  // Distinct random coordinates per variable and exponent.
  std::vector<std::vector<poly::Residue>> grid(n);
  for (auto& axis : grid) {
    while (axis.size() <= max_exponent) {
      const poly::Residue value = rng.uniform_below(field.modulus());
      if (std::find(axis.begin(), axis.end(), value) == axis.end()) axis.push_back(value);
    }
  }
  Form f(r, e, field);
  for (const auto& a : ideal) {
    Form linear(r, 1, field);
    linear.add_term(poly::Monomial(r).raised(0), 1);
    for (std::size_t k = 0; k < n; ++k) linear.add_term(poly::Monomial(r).raised(k + 1), grid[k][a[k]]);
    poly::Residue scale = 0;
    while (scale == 0) scale = rng.uniform_below(field.modulus());
    f += poly::power(linear, e).scaled(scale);
  }
  return InverseModule(r, e, {std::move(f)}, field);
}

HVector expected_h_si_points(std::size_t r, std::uint32_t e, std::span<const std::int64_t> delta) {
  (void)r;
  std::vector<std::int64_t> hilbert;  // H_Z(j)
  std::int64_t running = 0;
  for (std::uint32_t j = 0; j <= e; ++j) {
    if (j < delta.size()) running += delta[j];
    hilbert.push_back(running);
  }
  std::vector<std::int64_t> h;
  for (std::uint32_t j = 0; j <= e; ++j) h.push_back(std::min(hilbert[j], hilbert[e - j]));
  return HVector(std::move(h));
}

TrialOutcome best_of_trials(std::size_t trials, std::uint64_t master_seed,
                            const std::function<InverseModule(Rng&)>& build,
                            const std::optional<HVector>& ceiling) {
  if (trials == 0) throw InvalidArgument("best_of_trials needs at least one trial");
  std::optional<TrialOutcome> best;
  std::int64_t best_sum = -1;
  for (std::size_t k = 0; k < trials; ++k) {
    const std::uint64_t seed = derive_seed(master_seed, k);
    Rng rng(seed);
    InverseModule module = build(rng);
    inverse::HProfile profile = inverse::h_vector(module);
    profile.seeds = {seed};
    const auto entries = profile.h.entries();
    const std::int64_t sum = std::accumulate(entries.begin(), entries.end(), std::int64_t{0});
    const bool hit = ceiling && profile.h == *ceiling;
    if (hit || sum > best_sum) {
      best_sum = sum;
      best = TrialOutcome{std::move(module), std::move(profile), seed, k + 1};
    }
    best->trials_used = k + 1;
    if (hit) break;
  }
  return std::move(*best);
}

}  // namespace levellab::construct
