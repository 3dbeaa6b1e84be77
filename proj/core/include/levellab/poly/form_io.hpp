#pragma once

#include "levellab/poly/form.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace levellab::poly {

/// Parses one form, e.g. "3*y1^2*y2 - y3^3". Coefficients are reduced mod p,
/// variables must be y1..y<nvars>, and all terms must share one degree. Throws
/// ParseError with the byte offset and cause. The degree of a zero form is
/// taken from `degree` (default 0); when given, every term must match it.
Form parse_form(std::string_view text, std::size_t nvars, PrimeField field = PrimeField{},
                std::optional<std::uint32_t> degree = std::nullopt);

/// Canonical text: terms in descending grevlex order, coefficients printed as
/// their symmetric representative, unit coefficients and exponents omitted.
/// The zero form prints as "0".
std::string format_form(const Form& f);

/// A generator file: header `ring r=<r> e=<e>`, then one form per line.
/// Lines starting with `#` are comments. A comment of the form
/// `# prime=<p>` records the field the coefficients live in.
struct GeneratorFile {
  std::size_t nvars = 0;
  std::uint32_t degree = 0;
  PrimeField field;
  std::vector<Form> generators;
  std::vector<std::string> comments;  // without the leading '#'
};

/// `prime_override` wins over a `# prime=` comment; otherwise the default
/// prime is used.
GeneratorFile parse_generator_file(std::string_view text,
                                   std::optional<std::uint64_t> prime_override = std::nullopt);
GeneratorFile read_generator_file(const std::string& path,
                                  std::optional<std::uint64_t> prime_override = std::nullopt);

std::string format_generator_file(const GeneratorFile& file);

}  // namespace levellab::poly
