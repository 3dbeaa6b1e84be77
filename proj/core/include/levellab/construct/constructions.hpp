#pragma once

#include "levellab/inverse/inverse_module.hpp"
#include "levellab/macaulay/hvector.hpp"
#include "levellab/poly/form.hpp"
#include "levellab/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace levellab::construct {

/// L_1^e + ... + L_m^e for m random linear forms in r variables.
poly::Form sum_of_powers(std::size_t r, std::uint32_t e, std::size_t m, Rng& rng,
                         poly::PrimeField field = poly::PrimeField{});

/// h_j(m) = min{m, dim R_j, dim R_{e-j}}: the Gorenstein h-vector of a sum of m
/// general e-th powers.
HVector expected_h_sum_of_powers(std::size_t r, std::uint32_t e, std::size_t m);

/// <generators of base, F> with F a sum of `count` general e-th powers.
/// Requires 1 <= count <= dim R_e - type(base).
inverse::InverseModule augment_with_powers(const inverse::InverseModule& base, std::size_t count,
                                           Rng& rng);

/// H_i = min{h_i + h_i(count), dim R_i}. With no base this is the sum-of-powers
/// profile.
HVector expected_h_augment(const std::optional<HVector>& base, std::size_t r, std::uint32_t e,
                           std::size_t count);

/// Embeds base into r+1 variables and adjoins y_{r+1}^e. Raises every h_j,
/// 1 <= j <= e, by one.
inverse::InverseModule add_new_variable_power(const inverse::InverseModule& base);

/// t dense random forms of degree e. Requires 1 <= t <= dim R_e.
inverse::InverseModule compressed_generic_module(std::size_t r, std::uint32_t e, std::size_t t,
                                                 Rng& rng,
                                                 poly::PrimeField field = poly::PrimeField{});

/// min{dim R_i, t * dim R_{e-i}}, the profile of t generic forms.
HVector expected_h_compressed(std::size_t r, std::uint32_t e, std::size_t t);

/// t forms, the k-th a sum of parts[k] general e-th powers.
inverse::InverseModule powers_partition_module(std::size_t r, std::uint32_t e,
                                               std::span<const std::size_t> parts, Rng& rng,
                                               poly::PrimeField field = poly::PrimeField{});

/// H_j = min{sum_k min{m_k, dim R_j, dim R_{e-j}}, dim R_j}: repeated
/// augmentation by sums of powers.
HVector expected_h_powers_partition(std::size_t r, std::uint32_t e,
                                    std::span<const std::size_t> parts);

/// t quadrics, each a sum of squares of r general linear forms: (1, r, t).
/// Requires 1 <= t <= C(r+1, 2).
inverse::InverseModule realize_socle2(std::size_t r, std::size_t t, Rng& rng,
                                      poly::PrimeField field = poly::PrimeField{});

/// t cubics, the k-th a sum of parts[k] general cubes, 1 <= parts[k] <= r.
inverse::InverseModule realize_socle3_partition(std::size_t r, std::span<const std::size_t> parts,
                                                Rng& rng,
                                                poly::PrimeField field = poly::PrimeField{});

/// Lexicographically greatest partition of `total` into `count` parts, each in
/// 1..max_part. Throws InvalidArgument when none exists.
std::vector<std::size_t> greedy_partition(std::size_t total, std::size_t count,
                                          std::size_t max_part);

/// Gorenstein module F = sum_p c_p L_p^e over a point set Z whose affine
/// Hilbert function has first difference `delta` (an O-sequence in r-1
/// variables). Z is the lifting of the lex-last order ideal with Hilbert
/// function `delta` onto a grid of random coordinates.
inverse::InverseModule si_points_module(std::size_t r, std::uint32_t e,
                                        std::span<const std::int64_t> delta, Rng& rng,
                                        poly::PrimeField field = poly::PrimeField{});

/// min{H_Z(j), H_Z(e-j)} with H_Z the partial sums of `delta`.
HVector expected_h_si_points(std::size_t r, std::uint32_t e, std::span<const std::int64_t> delta);

struct TrialOutcome {
  inverse::InverseModule module;
  inverse::HProfile profile;
  std::uint64_t seed = 0;
  std::size_t trials_used = 0;
};

/// Runs `build` with seeds derive_seed(master_seed, k) for k < trials and keeps
/// the profile with the largest entry sum (the most generic sample). Stops
/// early once `ceiling` is reached.
TrialOutcome best_of_trials(std::size_t trials, std::uint64_t master_seed,
                            const std::function<inverse::InverseModule(Rng&)>& build,
                            const std::optional<HVector>& ceiling = std::nullopt);

}  // namespace levellab::construct
