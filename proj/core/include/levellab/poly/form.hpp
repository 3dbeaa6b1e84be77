#pragma once

#include "levellab/poly/monomial.hpp"
#include "levellab/poly/prime_field.hpp"
#include "levellab/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

namespace levellab::poly {

/// Homogeneous polynomial in the dual variables y_1..y_r over F_p. Zero
/// coefficients are never stored; the zero form has no terms but keeps its
/// degree.
class Form {
 public:
  using TermMap = std::map<Monomial, Residue, GrevlexGreater>;

  Form(std::size_t nvars, std::uint32_t degree, PrimeField field = PrimeField{});

  static Form monomial(const Monomial& m, Residue coefficient, PrimeField field = PrimeField{});
  /// y_{var+1}^degree
  static Form variable_power(std::size_t nvars, std::size_t var, std::uint32_t degree,
                             PrimeField field = PrimeField{});

  std::size_t nvars() const noexcept { return nvars_; }
  std::uint32_t degree() const noexcept { return degree_; }
  const PrimeField& field() const noexcept { return field_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Residue coefficient(const Monomial& m) const;

  /// Adds c * m; the monomial must have this form's degree and variable count.
  void add_term(const Monomial& m, Residue c);

  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  Form scaled(Residue c) const;
  Form operator*(const Form& other) const;

  /// Same polynomial in `nvars` >= nvars() variables.
  Form embedded(std::size_t nvars) const;

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend bool operator==(const Form& a, const Form& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ && a.field_ == b.field_ &&
           a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Form& other) const;

  std::size_t nvars_;
  std::uint32_t degree_;
  PrimeField field_;
  TermMap terms_;
};

/// Partial derivative with respect to y_{var+1} (0-based `var`). Degree-0
/// input gives the zero form of degree 0. Throws InvalidArgument on a bad
/// index.
Form differentiate(const Form& f, std::size_t var);

/// f^exponent by repeated multiplication.
Form power(const Form& f, std::uint32_t exponent);

/// Linear form with uniform random coefficients, resampled if all are zero.
Form random_linear_form(std::size_t nvars, Rng& rng, PrimeField field = PrimeField{});

/// Dense random form of the given degree (every coefficient uniform).
Form random_form(std::size_t nvars, std::uint32_t degree, Rng& rng, PrimeField field = PrimeField{});

/// c_1 f_1 + ... + c_k f_k; all forms must be compatible.
Form linear_combination(std::span<const Form> forms, std::span<const Residue> coefficients);

}  // namespace levellab::poly
