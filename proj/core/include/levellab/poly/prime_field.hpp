#pragma once

#include <cstdint>

namespace levellab::poly {

inline constexpr std::uint64_t kDefaultPrime = 2147483647;  // 2^31 - 1

/// Residue in [0, p). Arithmetic lives on PrimeField; this type only marks
/// values that are already reduced.
using Residue = std::uint64_t;

/// The prime field F_p for a prime p < 2^32, so that products of residues fit
/// in 64 bits.
class PrimeField {
 public:
  /// Throws InvalidArgument if `p` is not a prime in [2, 2^32).
  explicit PrimeField(std::uint64_t p = kDefaultPrime);

  std::uint64_t modulus() const noexcept { return p_; }

  Residue reduce(std::int64_t value) const noexcept;
  Residue add(Residue a, Residue b) const noexcept { return (a + b) % p_; }
  Residue sub(Residue a, Residue b) const noexcept { return (a + p_ - b) % p_; }
  Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Residue mul(Residue a, Residue b) const noexcept { return (a * b) % p_; }
  Residue pow(Residue base, std::uint64_t exponent) const noexcept;
  /// Throws InvalidArgument on zero.
  Residue inv(Residue a) const;

  /// Representative in (-p/2, p/2].
  std::int64_t symmetric(Residue a) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

bool is_prime(std::uint64_t n) noexcept;

}  // namespace levellab::poly
