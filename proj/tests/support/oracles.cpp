#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace oracle {

BigInt pascal(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  // columns 0..k of Pascal's triangle, one row at a time
  std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) row[j] += row[j - 1];
  }
  return row[k];
}

std::vector<Exponent> lex_monomials(int r, int d) {
  std::vector<Exponent> out;
  Exponent current(r, 0);
  std::function<void(int, int)> fill = [&](int var, int left) {
    if (var == r - 1) {
      current[var] = left;
      out.push_back(current);
      return;
    }
    for (int a = left; a >= 0; --a) {
      current[var] = a;
      fill(var + 1, left - a);
    }
  };
  fill(0, d);
  return out;
}

std::int64_t lex_growth(int r, int d, int n) {
  const auto degree_d = lex_monomials(r, d);
  const auto degree_next = lex_monomials(r, d + 1);
  const std::size_t ideal_size = degree_d.size() - static_cast<std::size_t>(n);
  std::int64_t outside = 0;
  for (const auto& m : degree_next) {
    bool divisible = false;
    for (std::size_t k = 0; k < ideal_size && !divisible; ++k) {
      bool divides = true;
      for (int v = 0; v < r; ++v) divides = divides && degree_d[k][v] <= m[v];
      divisible = divides;
    }
    if (!divisible) ++outside;
  }
  return outside;
}

std::size_t rational_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Rational factor = rows[i][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[i][k] -= factor * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

namespace {

BigInt determinant(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  BigInt total = 0;
  for (std::size_t col = 0; col < n; ++col) {
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<BigInt> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != col) row.push_back(m[i][j]);
      }
      minor.push_back(std::move(row));
    }
    const BigInt term = m[0][col] * determinant(minor);
    total += (col % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::size_t minor_rank(const std::vector<std::vector<BigInt>>& rows) {
  if (rows.empty()) return 0;
  const std::size_t m = rows.size();
  const std::size_t n = rows[0].size();
  for (std::size_t k = std::min(m, n); k >= 1; --k) {
    std::vector<std::size_t> ri(k), ci(k);
    for (std::size_t i = 0; i < k; ++i) ri[i] = i;
    do {
      for (std::size_t i = 0; i < k; ++i) ci[i] = i;
      do {
        std::vector<std::vector<BigInt>> sub(k, std::vector<BigInt>(k));
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t b = 0; b < k; ++b) sub[a][b] = rows[ri[a]][ci[b]];
        }
        if (determinant(sub) != 0) return k;
      } while (next_subset(ci, n));
    } while (next_subset(ri, m));
  }
  return 0;
}

int degree_of(const Poly& p) {
  if (p.empty()) throw std::invalid_argument("zero polynomial has no degree");
  int d = 0;
  for (int a : p.begin()->first) d += a;
  return d;
}

namespace {

Poly partial(const Poly& p, int var) {
  Poly out;
  for (const auto& [exp, coeff] : p) {
    if (exp[var] == 0) continue;
    Exponent lowered = exp;
    --lowered[var];
    out[lowered] += coeff * exp[var];
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

std::vector<std::size_t> derivative_dims(const std::vector<Poly>& generators, int nvars) {
  const int e = degree_of(generators.front());
  std::vector<std::size_t> dims;
  for (int j = 0; j <= e; ++j) {
    const auto basis = lex_monomials(nvars, j);
    std::vector<std::vector<Rational>> rows;
    for (const Exponent& alpha : lex_monomials(nvars, e - j)) {
      for (const Poly& f : generators) {
        Poly g = f;
        for (int v = 0; v < nvars; ++v) {
          for (int k = 0; k < alpha[v]; ++k) g = partial(g, v);
        }
        std::vector<Rational> row;
        for (const Exponent& m : basis) {
          auto it = g.find(m);
          row.emplace_back(it == g.end() ? BigInt(0) : it->second);
        }
        rows.push_back(std::move(row));
      }
    }
    dims.push_back(rational_rank(std::move(rows)));
  }
  return dims;
}

Poly sum_of_powers(const std::vector<std::vector<std::int64_t>>& linear_forms, int e) {
  Poly total;
  for (const auto& coeffs : linear_forms) {
    const int r = static_cast<int>(coeffs.size());
    for (const Exponent& exp : lex_monomials(r, e)) {
      // multinomial e! / prod a_v! times prod c_v^{a_v}
      BigInt term = 1;
      int left = e;
      for (int v = 0; v < r; ++v) {
        term *= pascal(left, exp[v]);
        left -= exp[v];
        for (int k = 0; k < exp[v]; ++k) term *= coeffs[v];
      }
      total[exp] += term;
    }
  }
  for (auto it = total.begin(); it != total.end();) it = it->second == 0 ? total.erase(it) : std::next(it);
  return total;
}

}  // namespace oracle
