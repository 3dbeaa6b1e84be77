#include "levellab/macaulay/hvector.hpp"

#include "levellab/error.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace levellab {

HVector::HVector(std::initializer_list<std::int64_t> entries) : entries_(entries) {
  validate();
}

HVector::HVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  validate();
}

void HVector::validate() {
  while (entries_.size() > 1 && entries_.back() == 0) entries_.pop_back();
  if (entries_.empty() || entries_[0] != 1) {
    throw InvalidArgument("h-vector must start with h_0 = 1");
  }
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] <= 0) {
      throw InvalidArgument("h-vector entry h_" + std::to_string(i) + " = " +
                            std::to_string(entries_[i]) + " is not positive");
    }
  }
}

HVector HVector::parse(std::string_view text) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  bool parenthesised = pos < text.size() && text[pos] == '(';
  if (parenthesised) ++pos;
  while (true) {
    skip_space();
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc{}) throw ParseError(pos, "expected an integer");
    values.push_back(value);
    pos = static_cast<std::size_t>(end - text.data());
    skip_space();
    if (pos < text.size() && text[pos] == ',') {
      ++pos;
      continue;
    }
    break;
  }
  if (parenthesised) {
    if (pos >= text.size() || text[pos] != ')') throw ParseError(pos, "expected ')'");
    ++pos;
    skip_space();
  }
  if (pos != text.size()) throw ParseError(pos, "unexpected trailing input");
  return HVector(std::move(values));
}

bool HVector::is_symmetric() const noexcept {
  const std::size_t e = socle_degree();
  for (std::size_t i = 0; i <= e / 2; ++i) {
    if (entries_[i] != entries_[e - i]) return false;
  }
  return true;
}

HVector HVector::with_entry(std::size_t degree, std::int64_t value) const {
  if (degree >= entries_.size()) {
    throw InvalidArgument("degree " + std::to_string(degree) + " beyond socle degree " +
                          std::to_string(socle_degree()));
  }
  std::vector<std::int64_t> copy = entries_;
  copy[degree] = value;
  if (degree == socle_degree() && value == 0) {
    throw InvalidArgument("cannot zero the socle-degree entry");
  }
  return HVector(std::move(copy));
}

HVector HVector::prefix(std::size_t degree) const {
  if (degree >= entries_.size()) {
    throw InvalidArgument("prefix degree beyond socle degree");
  }
  return HVector(std::vector<std::int64_t>(entries_.begin(),
                                           entries_.begin() + static_cast<std::ptrdiff_t>(degree + 1)));
}

std::string HVector::to_string() const { return levellab::to_string(entries_); }

std::string to_string(std::span<const std::int64_t> values) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out << ',';
    out << values[i];
  }
  return out.str();
}

}  // namespace levellab
