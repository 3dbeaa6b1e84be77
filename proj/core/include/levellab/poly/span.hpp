#pragma once

#include "levellab/poly/form.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <optional>
#include <unordered_map>
#include <vector>

namespace levellab::poly {

/// Column basis for dense coefficient vectors of degree-d forms: the degree-d
/// monomials in descending grevlex order.
class MonomialBasis {
 public:
  MonomialBasis(std::size_t nvars, std::uint32_t degree);

  std::size_t nvars() const noexcept { return nvars_; }
  std::uint32_t degree() const noexcept { return degree_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const Monomial& operator[](std::size_t index) const { return monomials_[index]; }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  std::size_t index_of(const Monomial& m) const;

 private:
  std::size_t nvars_;
  std::uint32_t degree_;
  std::vector<Monomial> monomials_;
  std::unordered_map<Monomial, std::size_t, MonomialHash> index_;
};

using DenseRow = std::vector<Residue>;

/// Incremental Gaussian elimination over F_p. Rows are kept with leading
/// coefficient 1 and reduced against each other, so `rows()` is in reduced
/// row-echelon form ordered by pivot column.
class RowEchelon {
 public:
  RowEchelon(std::size_t columns, PrimeField field);

  /// Reduces `row` against the current basis; appends it if independent.
  /// Returns true when the rank grew.
  bool insert(DenseRow row);

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t columns() const noexcept { return columns_; }
  /// Rows sorted by pivot column, fully reduced.
  std::vector<DenseRow> reduced_rows() const;

 private:
  std::size_t columns_;
  PrimeField field_;
  std::vector<DenseRow> rows_;
  std::vector<std::size_t> pivots_;
};

/// Reduced row-echelon basis of a space of degree-d forms.
class SpanBasis {
 public:
  SpanBasis(std::size_t nvars, std::uint32_t degree, PrimeField field, std::vector<DenseRow> rows);

  std::size_t nvars() const noexcept { return nvars_; }
  std::uint32_t degree() const noexcept { return degree_; }
  const PrimeField& field() const noexcept { return field_; }
  std::size_t dimension() const noexcept { return rows_.size(); }
  const std::vector<DenseRow>& rows() const noexcept { return rows_; }

  std::vector<Form> forms() const;

 private:
  std::size_t nvars_;
  std::uint32_t degree_;
  PrimeField field_;
  std::vector<DenseRow> rows_;
};

DenseRow to_dense(const Form& f, const MonomialBasis& basis);
Form from_dense(const DenseRow& row, const MonomialBasis& basis, PrimeField field);

/// Rank of the coefficient matrix of `forms`, all of degree `degree`. Throws
/// InvalidArgument on mixed degrees or variable counts.
std::size_t span_dimension(std::span<const Form> forms, std::uint32_t degree);

SpanBasis span_basis(std::span<const Form> forms, std::uint32_t degree);

/// For each j = 0..e, the span of all order-(e-j) partial derivatives of
/// `generators` (common degree e). Computed top-down: the degree j-1 space is
/// spanned by first derivatives of a basis of the degree j space. An empty
/// generator list throws InvalidArgument since the degree is then undefined.
std::vector<SpanBasis> derivative_spaces(std::span<const Form> generators);

/// Same as derivative_spaces but only the dimensions.
std::vector<std::size_t> derivative_dimensions(std::span<const Form> generators);

/// Dimensions of the derivative spaces of `generators` computed over Q, after
/// lifting each residue to its symmetric integer representative. Uses
/// fraction-free elimination on big integers. Returns nullopt when the top
/// degree has more than `max_columns` monomials.
std::optional<std::vector<std::size_t>> rational_derivative_dimensions(
    std::span<const Form> generators, std::size_t max_columns = 400);

}  // namespace levellab::poly
