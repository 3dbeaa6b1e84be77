#include "levellab/poly/span.hpp"

#include "levellab/bigint.hpp"
#include "levellab/error.hpp"

#include <algorithm>

namespace levellab::poly {

MonomialBasis::MonomialBasis(std::size_t nvars, std::uint32_t degree)
    : nvars_(nvars), degree_(degree), monomials_(monomials_of_degree(nvars, degree)) {
  index_.reserve(monomials_.size());
  for (std::size_t i = 0; i < monomials_.size(); ++i) index_.emplace(monomials_[i], i);
}

std::size_t MonomialBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw InvalidArgument("monomial not in basis");
  return it->second;
}

RowEchelon::RowEchelon(std::size_t columns, PrimeField field) : columns_(columns), field_(field) {}

bool RowEchelon::insert(DenseRow row) {
  if (row.size() != columns_) throw InvalidArgument("row length does not match column count");
  if (rows_.size() == columns_) return false;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Residue factor = row[pivots_[k]];
    if (factor == 0) continue;
    const DenseRow& basis_row = rows_[k];
    for (std::size_t c = pivots_[k]; c < columns_; ++c) {
      if (basis_row[c] != 0) row[c] = field_.sub(row[c], field_.mul(factor, basis_row[c]));
    }
  }
  auto lead = std::find_if(row.begin(), row.end(), [](Residue v) { return v != 0; });
  if (lead == row.end()) return false;
  const auto pivot = static_cast<std::size_t>(lead - row.begin());
  const Residue scale = field_.inv(row[pivot]);
  for (std::size_t c = pivot; c < columns_; ++c) row[c] = field_.mul(row[c], scale);
  // keep the basis reduced: clear the new pivot column from existing rows
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Residue factor = rows_[k][pivot];
    if (factor == 0) continue;
    for (std::size_t c = pivot; c < columns_; ++c) {
      if (row[c] != 0) rows_[k][c] = field_.sub(rows_[k][c], field_.mul(factor, row[c]));
    }
  }
  rows_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

std::vector<DenseRow> RowEchelon::reduced_rows() const {
  std::vector<std::size_t> order(rows_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivots_[a] < pivots_[b]; });
  std::vector<DenseRow> out;
  out.reserve(rows_.size());
  for (std::size_t i : order) out.push_back(rows_[i]);
  return out;
}

SpanBasis::SpanBasis(std::size_t nvars, std::uint32_t degree, PrimeField field,
                     std::vector<DenseRow> rows)
    : nvars_(nvars), degree_(degree), field_(field), rows_(std::move(rows)) {}

std::vector<Form> SpanBasis::forms() const {
  MonomialBasis basis(nvars_, degree_);
  std::vector<Form> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(from_dense(row, basis, field_));
  return out;
}

DenseRow to_dense(const Form& f, const MonomialBasis& basis) {
  if (f.nvars() != basis.nvars() || f.degree() != basis.degree()) {
    throw InvalidArgument("form does not live in the given monomial basis");
  }
  DenseRow row(basis.size(), 0);
  for (const auto& [m, c] : f.terms()) row[basis.index_of(m)] = c;
  return row;
}

Form from_dense(const DenseRow& row, const MonomialBasis& basis, PrimeField field) {
  Form f(basis.nvars(), basis.degree(), field);
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] != 0) f.add_term(basis[i], row[i]);
  }
  return f;
}

namespace {

void check_uniform(std::span<const Form> forms, std::uint32_t degree) {
  for (const Form& f : forms) {
    if (f.degree() != degree) {
      throw InvalidArgument("form of degree " + std::to_string(f.degree()) +
                            " in a degree " + std::to_string(degree) + " span");
    }
    if (f.nvars() != forms[0].nvars() || !(f.field() == forms[0].field())) {
      throw InvalidArgument("forms over different rings in one span");
    }
  }
}

// For each monomial of a degree-d basis and each variable: index of the
// lowered monomial in the degree d-1 basis and the exponent, or npos.
struct DerivativeTable {
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::vector<std::size_t> target;
  std::vector<std::uint32_t> exponent;
  std::size_t nvars;

  DerivativeTable(const MonomialBasis& upper, const MonomialBasis& lower)
      : target(upper.size() * upper.nvars(), npos),
        exponent(upper.size() * upper.nvars(), 0),
        nvars(upper.nvars()) {
    for (std::size_t k = 0; k < upper.size(); ++k) {
      for (std::size_t v = 0; v < nvars; ++v) {
        const std::uint32_t e = upper[k][v];
        if (e == 0) continue;
        target[k * nvars + v] = lower.index_of(upper[k].lowered(v));
        exponent[k * nvars + v] = e;
      }
    }
  }
};

}  // namespace

SpanBasis span_basis(std::span<const Form> forms, std::uint32_t degree) {
  check_uniform(forms, degree);
  if (forms.empty()) return SpanBasis(1, degree, PrimeField{}, {});
  MonomialBasis basis(forms[0].nvars(), degree);
  RowEchelon echelon(basis.size(), forms[0].field());
  for (const Form& f : forms) echelon.insert(to_dense(f, basis));
  return SpanBasis(forms[0].nvars(), degree, forms[0].field(), echelon.reduced_rows());
}

std::size_t span_dimension(std::span<const Form> forms, std::uint32_t degree) {
  return span_basis(forms, degree).dimension();
}

std::vector<SpanBasis> derivative_spaces(std::span<const Form> generators) {
  if (generators.empty()) throw InvalidArgument("derivative spaces of an empty generator list");
  const std::uint32_t e = generators[0].degree();
  check_uniform(generators, e);
  const std::size_t r = generators[0].nvars();
  const PrimeField field = generators[0].field();

  std::vector<SpanBasis> spaces;
  spaces.reserve(e + 1);
  MonomialBasis upper(r, e);
  spaces.push_back(span_basis(generators, e));
  for (std::uint32_t j = e; j >= 1; --j) {
    MonomialBasis lower(r, j - 1);
    DerivativeTable table(upper, lower);
    RowEchelon echelon(lower.size(), field);
    for (const DenseRow& row : spaces.back().rows()) {
      for (std::size_t v = 0; v < r && echelon.rank() < lower.size(); ++v) {
        DenseRow derivative(lower.size(), 0);
        bool nonzero = false;
        for (std::size_t k = 0; k < row.size(); ++k) {
          if (row[k] == 0) continue;
          const std::size_t t = table.target[k * r + v];
          if (t == DerivativeTable::npos) continue;
          derivative[t] = field.add(derivative[t], field.mul(row[k], table.exponent[k * r + v] % field.modulus()));
          nonzero = true;
        }
        if (nonzero) echelon.insert(std::move(derivative));
      }
    }
    spaces.push_back(SpanBasis(r, j - 1, field, echelon.reduced_rows()));
    upper = std::move(lower);
  }
  std::reverse(spaces.begin(), spaces.end());
  return spaces;
}

std::vector<std::size_t> derivative_dimensions(std::span<const Form> generators) {
  std::vector<std::size_t> dims;
  for (const SpanBasis& space : derivative_spaces(generators)) dims.push_back(space.dimension());
  return dims;
}

namespace {

using IntRow = std::vector<BigInt>;

// Fraction-free row echelon form over Z spanning the same Q-space. Rows are
// kept primitive and sorted by pivot; row with pivot c vanishes left of c.
class IntegerEchelon {
 public:
  explicit IntegerEchelon(std::size_t columns) : columns_(columns) {}

  bool insert(IntRow row) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const std::size_t c = pivots_[k];
      if (row[c] == 0) continue;
      const BigInt a = rows_[k][c];
      const BigInt b = row[c];
      for (std::size_t i = c; i < columns_; ++i) row[i] = a * row[i] - b * rows_[k][i];
      make_primitive(row);
    }
    auto lead = std::find_if(row.begin(), row.end(), [](const BigInt& v) { return v != 0; });
    if (lead == row.end()) return false;
    const auto pivot = static_cast<std::size_t>(lead - row.begin());
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    const auto offset = pos - pivots_.begin();
    pivots_.insert(pos, pivot);
    rows_.insert(rows_.begin() + offset, std::move(row));
    return true;
  }

  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<IntRow>& rows() const noexcept { return rows_; }

 private:
  static void make_primitive(IntRow& row) {
    BigInt g = 0;
    for (const BigInt& v : row) {
      if (v != 0) g = boost::multiprecision::gcd(g, v);
      if (g == 1) return;
    }
    if (g > 1) {
      for (BigInt& v : row) v /= g;
    }
  }

  std::size_t columns_;
  std::vector<IntRow> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace

std::optional<std::vector<std::size_t>> rational_derivative_dimensions(
    std::span<const Form> generators, std::size_t max_columns) {
  if (generators.empty()) throw InvalidArgument("derivative spaces of an empty generator list");
  const std::uint32_t e = generators[0].degree();
  check_uniform(generators, e);
  const std::size_t r = generators[0].nvars();
  const PrimeField field = generators[0].field();

  MonomialBasis upper(r, e);
  if (upper.size() > max_columns) return std::nullopt;

  IntegerEchelon top(upper.size());
  for (const Form& f : generators) {
    IntRow row(upper.size(), 0);
    for (const auto& [m, c] : f.terms()) row[upper.index_of(m)] = field.symmetric(c);
    top.insert(std::move(row));
  }
  std::vector<std::size_t> dims{top.rank()};
  std::vector<IntRow> current = top.rows();
  for (std::uint32_t j = e; j >= 1; --j) {
    MonomialBasis lower(r, j - 1);
    DerivativeTable table(upper, lower);
    IntegerEchelon echelon(lower.size());
    for (const IntRow& row : current) {
      for (std::size_t v = 0; v < r && echelon.rank() < lower.size(); ++v) {
        IntRow derivative(lower.size(), 0);
        bool nonzero = false;
        for (std::size_t k = 0; k < row.size(); ++k) {
          if (row[k] == 0) continue;
          const std::size_t t = table.target[k * r + v];
          if (t == DerivativeTable::npos) continue;
          derivative[t] += row[k] * table.exponent[k * r + v];
          nonzero = true;
        }
        if (nonzero) echelon.insert(std::move(derivative));
      }
    }
    dims.push_back(echelon.rank());
    current = echelon.rows();
    upper = std::move(lower);
  }
  std::reverse(dims.begin(), dims.end());
  return dims;
}

}  // namespace levellab::poly
