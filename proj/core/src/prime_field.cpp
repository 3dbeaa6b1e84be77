#include "levellab/poly/prime_field.hpp"

#include "levellab/error.hpp"

namespace levellab::poly {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 32) || !is_prime(p)) {
    throw InvalidArgument("modulus " + std::to_string(p) + " is not a prime below 2^32");
  }
}

Residue PrimeField::reduce(std::int64_t value) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return static_cast<Residue>(r);
}

Residue PrimeField::pow(Residue base, std::uint64_t exponent) const noexcept {
  Residue result = 1 % p_;
  base %= p_;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, base);
    base = mul(base, base);
    exponent >>= 1;
  }
  return result;
}

Residue PrimeField::inv(Residue a) const {
  if (a % p_ == 0) throw InvalidArgument("inverse of zero in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

std::int64_t PrimeField::symmetric(Residue a) const noexcept {
  const auto value = static_cast<std::int64_t>(a);
  return a > p_ / 2 ? value - static_cast<std::int64_t>(p_) : value;
}

}  // namespace levellab::poly
