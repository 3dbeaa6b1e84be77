#pragma once

#include "levellab/bigint.hpp"
#include "levellab/macaulay/hvector.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace levellab::macaulay {

/// Exact C(n, k); zero when k > n.
BigInt binomial(std::uint64_t n, std::uint64_t k);
/// Same for a big top index; n must be non-negative.
BigInt binomial(const BigInt& n, std::uint64_t k);

/// dim of the degree-d part of a polynomial ring in r variables, C(r+d-1, d).
BigInt ring_dimension(std::uint64_t r, std::uint64_t d);

struct BinomialTerm {
  BigInt top;
  std::int64_t bottom;

  friend bool operator==(const BinomialTerm&, const BinomialTerm&) = default;
};

/// n = C(n_i, i) + C(n_{i-1}, i-1) + ... + C(n_j, j) with
/// n_i > n_{i-1} > ... > n_j >= j >= 1.
class BinomialExpansion {
 public:
  BinomialExpansion(std::int64_t degree, std::vector<BinomialTerm> terms);

  std::int64_t degree() const noexcept { return degree_; }
  const std::vector<BinomialTerm>& terms() const noexcept { return terms_; }

  /// Sum of the binomials; reconstructs the expanded integer.
  BigInt value() const;

  /// "C(7,2)+C(4,1)"
  std::string to_string() const;

 private:
  std::int64_t degree_;
  std::vector<BinomialTerm> terms_;
};

/// Greedy i-binomial expansion of n. Throws InvalidArgument unless n >= 1 and
/// i >= 1.
BinomialExpansion binomial_expansion(const BigInt& n, std::int64_t i);

/// sum over terms of C(n_k + a, k + a). A term reaching lower index 0
/// contributes 1; a negative lower index throws InvalidArgument.
BigInt shift_expansion(const BinomialExpansion& expansion, std::int64_t a);

/// Largest admissible value in degree d + 1 after value n in degree d:
/// (n_(d))^{+1}_{+1}. Zero maps to zero.
BigInt macaulay_upper_bound(const BigInt& n, std::int64_t d);

struct GrowthViolation {
  std::size_t degree;  // growth from `degree` to `degree + 1` fails
  BigInt value;        // entry in degree + 1
  BigInt bound;        // Macaulay bound for it
};

/// First failure of Macaulay's growth condition in an arbitrary integer
/// sequence. Negative entries and a leading entry other than 1 are reported at
/// the offending index with bound 0 (resp. 1).
std::optional<GrowthViolation> first_growth_violation(std::span<const std::int64_t> values);

bool is_o_sequence(std::span<const std::int64_t> values);
bool is_o_sequence(const HVector& h);

/// (1, h_1 - h_0, ..., h_{floor(e/2)} - h_{floor(e/2)-1}).
std::vector<std::int64_t> first_difference(const HVector& h);

/// Symmetric with an O-sequence first difference on the first half.
bool is_si_sequence(const HVector& h);

}  // namespace levellab::macaulay
