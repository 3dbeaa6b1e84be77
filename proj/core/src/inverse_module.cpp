#include "levellab/inverse/inverse_module.hpp"

#include "levellab/error.hpp"

#include <sstream>

namespace levellab::inverse {

InverseModule::InverseModule(std::size_t r, std::uint32_t e, std::vector<poly::Form> generators,
                             poly::PrimeField field)
    : r_(r), e_(e), field_(field), generators_(std::move(generators)) {
  if (r_ == 0) throw InvalidArgument("inverse module needs at least one variable");
  for (const auto& g : generators_) {
    if (g.nvars() != r_ || g.degree() != e_ || !(g.field() == field_)) {
      throw InvalidArgument("generator of degree " + std::to_string(g.degree()) + " in " +
                            std::to_string(g.nvars()) + " variables does not fit ring r=" +
                            std::to_string(r_) + " e=" + std::to_string(e_));
    }
  }
}

InverseModule InverseModule::from_forms(std::vector<poly::Form> generators) {
  if (generators.empty()) throw InvalidArgument("from_forms needs at least one generator");
  const auto r = generators[0].nvars();
  const auto e = generators[0].degree();
  const auto field = generators[0].field();
  return InverseModule(r, e, std::move(generators), field);
}

std::string HProfile::to_record() const {
  std::ostringstream out;
  std::vector<std::int64_t> dims(dimensions.begin(), dimensions.end());
  out << "h=" << h.to_string() << " dims=" << to_string(dims) << " prime=" << prime
      << " seeds=";
  for (std::size_t i = 0; i < seeds.size(); ++i) out << (i ? "," : "") << seeds[i];
  if (seeds.empty()) out << '-';
  out << " generators=" << generator_count;
  return out.str();
}

HProfile h_vector(const InverseModule& m) {
  if (m.empty()) throw InvalidArgument("the zero module has no h-vector");
  HProfile profile;
  profile.dimensions = poly::derivative_dimensions(m.generators());
  if (profile.dimensions.back() == 0) throw InvalidArgument("the zero module has no h-vector");
  profile.h = HVector(std::vector<std::int64_t>(profile.dimensions.begin(), profile.dimensions.end()));
  profile.prime = m.field().modulus();
  profile.generator_count = m.generators().size();
  return profile;
}

std::size_t type_of(const InverseModule& m) {
  if (m.empty()) return 0;
  return poly::span_dimension(m.generators(), m.e());
}

bool is_level_presentation(const InverseModule& m) {
  return !m.empty() && type_of(m) == m.generators().size();
}

GorensteinCheck is_gorenstein(const InverseModule& m) {
  GorensteinCheck check{false, h_vector(m)};
  check.gorenstein = check.profile.h.last() == 1 && check.profile.independent();
  if (check.profile.h.last() == 1 && !check.profile.h.is_symmetric()) {
    throw SoundnessError("type-1 module with asymmetric h-vector " + check.profile.h.to_string());
  }
  return check;
}

std::vector<std::int64_t> common_derivative_dims(const poly::Form& f, const poly::Form& g) {
  if (f.degree() != g.degree() || f.nvars() != g.nvars() || !(f.field() == g.field())) {
    throw InvalidArgument("common derivatives need forms of one degree over one ring");
  }
  const auto a = poly::derivative_spaces(std::span<const poly::Form>(&f, 1));
  const auto b = poly::derivative_spaces(std::span<const poly::Form>(&g, 1));
  const std::vector<poly::Form> both{f, g};
  const auto sum = poly::derivative_spaces(both);
  std::vector<std::int64_t> d;
  for (std::size_t i = 0; i < sum.size(); ++i) {
    d.push_back(static_cast<std::int64_t>(a[i].dimension() + b[i].dimension()) -
                static_cast<std::int64_t>(sum[i].dimension()));
  }
  return d;
}

Subquotient generic_subquotient(const InverseModule& m, std::size_t c, Rng& rng) {
  const std::size_t t = type_of(m);
  if (c < 1 || c > t) {
    throw InvalidArgument("quotient type " + std::to_string(c) + " outside 1.." + std::to_string(t));
  }
  const auto& gens = m.generators();
  const std::size_t n = gens.size();
  while (true) {
    std::vector<poly::Residue> matrix(c * n);
    for (auto& entry : matrix) entry = rng.uniform_below(m.field().modulus());
    std::vector<poly::Form> combos;
    combos.reserve(c);
    for (std::size_t row = 0; row < c; ++row) {
      combos.push_back(poly::linear_combination(
          gens, std::span<const poly::Residue>(matrix.data() + row * n, n)));
    }
    if (poly::span_dimension(combos, m.e()) == c) {
      return {InverseModule(m.r(), m.e(), std::move(combos), m.field()), std::move(matrix)};
    }
  }
}

InverseModule truncate_level(const InverseModule& m, std::uint32_t new_degree) {
  if (new_degree < 1 || new_degree > m.e()) {
    throw InvalidArgument("truncation degree " + std::to_string(new_degree) + " outside 1.." +
                          std::to_string(m.e()));
  }
  if (m.empty()) throw InvalidArgument("cannot truncate the zero module");
  auto spaces = poly::derivative_spaces(m.generators());
  return InverseModule(m.r(), new_degree, spaces[new_degree].forms(), m.field());
}

}  // namespace levellab::inverse
