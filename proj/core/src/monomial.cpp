#include "levellab/poly/monomial.hpp"

#include "levellab/error.hpp"

#include <algorithm>
#include <numeric>

namespace levellab::poly {

std::uint32_t Monomial::degree() const noexcept {
  return std::accumulate(exponents_.begin(), exponents_.end(), std::uint32_t{0});
}

Monomial Monomial::times(const Monomial& other) const {
  if (other.nvars() != nvars()) throw InvalidArgument("monomials over different rings");
  std::vector<std::uint32_t> sum = exponents_;
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] += other.exponents_[i];
  return Monomial(std::move(sum));
}

Monomial Monomial::lowered(std::size_t var) const {
  if (var >= nvars() || exponents_[var] == 0) {
    throw InvalidArgument("cannot lower exponent of variable " + std::to_string(var + 1));
  }
  Monomial copy = *this;
  --copy.exponents_[var];
  return copy;
}

Monomial Monomial::raised(std::size_t var) const {
  if (var >= nvars()) throw InvalidArgument("variable index out of range");
  Monomial copy = *this;
  ++copy.exponents_[var];
  return copy;
}

Monomial Monomial::embedded(std::size_t nvars) const {
  if (nvars < this->nvars()) throw InvalidArgument("cannot embed into fewer variables");
  std::vector<std::uint32_t> padded = exponents_;
  padded.resize(nvars, 0);
  return Monomial(std::move(padded));
}

std::strong_ordering grevlex(const Monomial& a, const Monomial& b) {
  const std::uint32_t da = a.degree();
  const std::uint32_t db = b.degree();
  if (da != db) return da <=> db;
  const std::size_t n = std::min(a.nvars(), b.nvars());
  for (std::size_t i = n; i-- > 0;) {
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return a.nvars() <=> b.nvars();
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (std::uint32_t e : m.exponents()) h = (h ^ e) * 0x100000001b3ULL + (h >> 29);
  return h;
}

namespace {

void enumerate(std::size_t var, std::uint32_t remaining, std::vector<std::uint32_t>& current,
               std::vector<Monomial>& out) {
  if (var + 1 == current.size()) {
    current[var] = remaining;
    out.emplace_back(current);
    return;
  }
  for (std::uint32_t e = remaining + 1; e-- > 0;) {
    current[var] = e;
    enumerate(var + 1, remaining - e, current, out);
  }
  current[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t r, std::uint32_t d) {
  if (r == 0) throw InvalidArgument("monomials_of_degree: need at least one variable");
  std::vector<Monomial> out;
  std::vector<std::uint32_t> current(r, 0);
  enumerate(0, d, current, out);
  std::sort(out.begin(), out.end(), GrevlexGreater{});
  return out;
}

}  // namespace levellab::poly
