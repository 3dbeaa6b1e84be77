#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace levellab::poly {

/// Exponent vector of a monomial in y_1..y_r.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exponents_(nvars, 0) {}
  Monomial(std::initializer_list<std::uint32_t> exponents) : exponents_(exponents) {}
  explicit Monomial(std::vector<std::uint32_t> exponents) : exponents_(std::move(exponents)) {}

  std::size_t nvars() const noexcept { return exponents_.size(); }
  std::uint32_t degree() const noexcept;
  std::uint32_t operator[](std::size_t var) const { return exponents_.at(var); }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exponents_; }

  Monomial times(const Monomial& other) const;
  /// Requires exponent of `var` to be positive.
  Monomial lowered(std::size_t var) const;
  Monomial raised(std::size_t var) const;
  /// Zero-pads to `nvars` variables.
  Monomial embedded(std::size_t nvars) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::uint32_t> exponents_;
};

/// Graded reverse lexicographic order: higher degree first; within a degree
/// a > b iff the last non-zero entry of a - b is negative.
std::strong_ordering grevlex(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

/// All degree-d monomials in r variables, in descending grevlex order;
/// exactly C(r+d-1, d) of them.
std::vector<Monomial> monomials_of_degree(std::size_t r, std::uint32_t d);

}  // namespace levellab::poly
