#include "levellab/poly/form.hpp"

#include "levellab/error.hpp"
#include "levellab/poly/span.hpp"

namespace levellab::poly {

Form::Form(std::size_t nvars, std::uint32_t degree, PrimeField field)
    : nvars_(nvars), degree_(degree), field_(field) {
  if (nvars == 0) throw InvalidArgument("a form needs at least one variable");
}

Form Form::monomial(const Monomial& m, Residue coefficient, PrimeField field) {
  Form f(m.nvars(), m.degree(), field);
  f.add_term(m, coefficient);
  return f;
}

Form Form::variable_power(std::size_t nvars, std::size_t var, std::uint32_t degree,
                          PrimeField field) {
  if (var >= nvars) throw InvalidArgument("variable index out of range");
  std::vector<std::uint32_t> exps(nvars, 0);
  exps[var] = degree;
  return monomial(Monomial(std::move(exps)), 1, field);
}

Residue Form::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void Form::add_term(const Monomial& m, Residue c) {
  if (m.nvars() != nvars_ || m.degree() != degree_) {
    throw InvalidArgument("term of degree " + std::to_string(m.degree()) + " in " +
                          std::to_string(m.nvars()) + " variables added to a degree " +
                          std::to_string(degree_) + " form in " + std::to_string(nvars_) +
                          " variables");
  }
  c %= field_.modulus();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

void Form::check_compatible(const Form& other) const {
  if (other.nvars_ != nvars_ || other.degree_ != degree_ || !(other.field_ == field_)) {
    throw InvalidArgument("forms differ in degree, variable count or field");
  }
}

Form& Form::operator+=(const Form& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Form& Form::operator-=(const Form& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, field_.neg(c));
  return *this;
}

Form Form::scaled(Residue c) const {
  Form out(nvars_, degree_, field_);
  c %= field_.modulus();
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, field_.mul(coeff, c));
  return out;
}

Form Form::operator*(const Form& other) const {
  if (other.nvars_ != nvars_ || !(other.field_ == field_)) {
    throw InvalidArgument("cannot multiply forms over different rings");
  }
  Form out(nvars_, degree_ + other.degree_, field_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) out.add_term(ma.times(mb), field_.mul(ca, cb));
  }
  return out;
}

Form Form::embedded(std::size_t nvars) const {
  Form out(nvars, degree_, field_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m.embedded(nvars), c);
  return out;
}

Form differentiate(const Form& f, std::size_t var) {
  if (var >= f.nvars()) {
    throw InvalidArgument("variable y" + std::to_string(var + 1) + " not in a ring with " +
                          std::to_string(f.nvars()) + " variables");
  }
  if (f.degree() == 0) return Form(f.nvars(), 0, f.field());
  Form out(f.nvars(), f.degree() - 1, f.field());
  for (const auto& [m, c] : f.terms()) {
    const std::uint32_t e = m[var];
    if (e == 0) continue;
    out.add_term(m.lowered(var), f.field().mul(c, e % f.field().modulus()));
  }
  return out;
}

Form power(const Form& f, std::uint32_t exponent) {
  Form result = Form::monomial(Monomial(f.nvars()), 1, f.field());
  Form base = f;
  // square-and-multiply; all intermediate forms are homogeneous
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Form random_linear_form(std::size_t nvars, Rng& rng, PrimeField field) {
  while (true) {
    Form out(nvars, 1, field);
    for (std::size_t i = 0; i < nvars; ++i) {
      Monomial m(nvars);
      out.add_term(m.raised(i), rng.uniform_below(field.modulus()));
    }
    if (!out.is_zero()) return out;
  }
}

Form random_form(std::size_t nvars, std::uint32_t degree, Rng& rng, PrimeField field) {
  Form out(nvars, degree, field);
  for (const Monomial& m : monomials_of_degree(nvars, degree)) {
    out.add_term(m, rng.uniform_below(field.modulus()));
  }
  return out;
}

Form linear_combination(std::span<const Form> forms, std::span<const Residue> coefficients) {
  if (forms.empty()) throw InvalidArgument("linear combination of no forms");
  if (forms.size() != coefficients.size()) {
    throw InvalidArgument("coefficient count does not match form count");
  }
  Form out(forms[0].nvars(), forms[0].degree(), forms[0].field());
  for (std::size_t k = 0; k < forms.size(); ++k) out += forms[k].scaled(coefficients[k]);
  return out;
}

}  // namespace levellab::poly
