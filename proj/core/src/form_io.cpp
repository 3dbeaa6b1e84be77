#include "levellab/poly/form_io.hpp"

#include "levellab/error.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace levellab::poly {

namespace {

class FormParser {
 public:
  FormParser(std::string_view text, std::size_t nvars, PrimeField field)
      : text_(text), nvars_(nvars), field_(field) {}

  Form parse(std::optional<std::uint32_t> degree) {
    std::vector<std::pair<Monomial, Residue>> terms;
    skip_space();
    if (at_end()) throw ParseError(pos_, "empty form");
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      skip_space();
      const std::size_t term_start = pos_;
      auto [monomial, coefficient] = parse_term();
      if (negative) coefficient = field_.neg(coefficient);
      if (degree && monomial.degree() != *degree && coefficient != 0) {
        throw ParseError(term_start, "term has degree " + std::to_string(monomial.degree()) +
                                         ", expected " + std::to_string(*degree));
      }
      if (!terms.empty() && monomial.degree() != terms.front().first.degree()) {
        throw ParseError(term_start, "form is not homogeneous");
      }
      terms.emplace_back(std::move(monomial), coefficient);
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') throw ParseError(pos_, "expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    const std::uint32_t d = degree.value_or(terms.front().first.degree());
    Form f(nvars_, d, field_);
    for (const auto& [m, c] : terms) {
      if (c != 0) f.add_term(m, c);
    }
    return f;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  Residue parse_coefficient() {
    Residue value = 0;
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = field_.add(field_.mul(value, 10), static_cast<Residue>(peek() - '0'));
      ++pos_;
    }
    if (pos_ == start) throw ParseError(pos_, "expected digits");
    return value;
  }

  std::uint32_t parse_small(const char* what) {
    std::uint32_t value = 0;
    auto [end, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec == std::errc::result_out_of_range) throw ParseError(pos_, std::string(what) + " too large");
    if (ec != std::errc{}) throw ParseError(pos_, std::string("expected ") + what);
    pos_ = static_cast<std::size_t>(end - text_.data());
    return value;
  }

  std::pair<Monomial, Residue> parse_term() {
    std::vector<std::uint32_t> exponents(nvars_, 0);
    Residue coefficient = 1;
    bool have_factor = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coefficient = parse_coefficient();
      have_factor = true;
      skip_space();
      if (at_end() || peek() != '*') return {Monomial(std::move(exponents)), coefficient};
      ++pos_;
      skip_space();
    }
    while (true) {
      if (at_end() || peek() != 'y') {
        throw ParseError(pos_, have_factor ? "expected variable after '*'"
                                           : "expected coefficient or variable");
      }
      const std::size_t var_pos = pos_;
      ++pos_;
      const std::uint32_t index = parse_small("variable index");
      if (index < 1 || index > nvars_) {
        throw ParseError(var_pos, "variable y" + std::to_string(index) + " outside y1..y" +
                                      std::to_string(nvars_));
      }
      std::uint32_t exponent = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        exponent = parse_small("exponent");
      }
      exponents[index - 1] += exponent;
      have_factor = true;
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
      skip_space();
    }
    return {Monomial(std::move(exponents)), coefficient};
  }

  std::string_view text_;
  std::size_t nvars_;
  PrimeField field_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
std::optional<T> parse_key_value(std::string_view token, std::string_view key) {
  if (token.substr(0, key.size()) != key || token.size() == key.size()) return std::nullopt;
  T value{};
  const char* first = token.data() + key.size();
  const char* last = token.data() + token.size();
  auto [end, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || end != last) return std::nullopt;
  return value;
}

}  // namespace

Form parse_form(std::string_view text, std::size_t nvars, PrimeField field,
                std::optional<std::uint32_t> degree) {
  if (nvars == 0) throw InvalidArgument("parse_form: ring needs at least one variable");
  return FormParser(text, nvars, field).parse(degree);
}

std::string format_form(const Form& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    const std::int64_t value = f.field().symmetric(c);
    const bool negative = value < 0;
    const std::uint64_t magnitude = negative ? static_cast<std::uint64_t>(-value)
                                             : static_cast<std::uint64_t>(value);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const bool constant = m.degree() == 0;
    bool wrote = false;
    if (magnitude != 1 || constant) {
      out << magnitude;
      wrote = true;
    }
    for (std::size_t v = 0; v < m.nvars(); ++v) {
      if (m[v] == 0) continue;
      if (wrote) out << '*';
      out << 'y' << (v + 1);
      if (m[v] != 1) out << '^' << m[v];
      wrote = true;
    }
  }
  return out.str();
}

GeneratorFile parse_generator_file(std::string_view text,
                                   std::optional<std::uint64_t> prime_override) {
  GeneratorFile file;
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::optional<std::uint64_t> declared_prime;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = trim(text.substr(start, end - start));
    if (!line.empty()) {
      if (line.front() == '#') {
        std::string_view comment = trim(line.substr(1));
        file.comments.emplace_back(comment);
        if (auto p = parse_key_value<std::uint64_t>(comment, "prime=")) declared_prime = p;
      } else {
        lines.emplace_back(line_no, line);
      }
    }
    start = end + 1;
  }
  if (lines.empty()) throw ParseError(0, "missing `ring r=<r> e=<e>` header");

  {
    auto [header_line, header] = lines.front();
    std::istringstream tokens{std::string(header)};
    std::string keyword, r_token, e_token, extra;
    tokens >> keyword >> r_token >> e_token;
    auto r = parse_key_value<std::size_t>(r_token, "r=");
    auto e = parse_key_value<std::uint32_t>(e_token, "e=");
    if (keyword != "ring" || !r || !e || (tokens >> extra) || *r == 0) {
      throw ParseError(0, "line " + std::to_string(header_line) +
                              ": expected header `ring r=<r> e=<e>`");
    }
    file.nvars = *r;
    file.degree = *e;
  }
  file.field = PrimeField(prime_override.value_or(declared_prime.value_or(kDefaultPrime)));

  for (std::size_t k = 1; k < lines.size(); ++k) {
    auto [number, line] = lines[k];
    try {
      file.generators.push_back(parse_form(line, file.nvars, file.field, file.degree));
    } catch (const ParseError& err) {
      throw ParseError(err.position(), "line " + std::to_string(number) + ": " + err.cause());
    }
  }
  return file;
}

GeneratorFile read_generator_file(const std::string& path,
                                  std::optional<std::uint64_t> prime_override) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open generator file " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_generator_file(buffer.str(), prime_override);
}

std::string format_generator_file(const GeneratorFile& file) {
  std::ostringstream out;
  out << "ring r=" << file.nvars << " e=" << file.degree << '\n';
  out << "# prime=" << file.field.modulus() << '\n';
  for (const std::string& comment : file.comments) {
    if (comment.rfind("prime=", 0) == 0) continue;
    out << "# " << comment << '\n';
  }
  for (const Form& f : file.generators) out << format_form(f) << '\n';
  return out.str();
}

}  // namespace levellab::poly
