#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace levellab {

/// Hilbert function (h-vector) of a standard graded artinian algebra:
/// entries[i] = dim A_i, entries[0] = 1, all entries positive, trailing zeros
/// trimmed so that the last index is the socle degree.
class HVector {
 public:
  HVector() : entries_{1} {}
  HVector(std::initializer_list<std::int64_t> entries);
  explicit HVector(std::vector<std::int64_t> entries);

  /// Parses "1,3,6,10,4", optionally wrapped in parentheses, with optional
  /// whitespace.
  static HVector parse(std::string_view text);

  std::size_t socle_degree() const noexcept { return entries_.size() - 1; }
  /// h_1, or 0 for the field itself.
  std::int64_t codimension() const noexcept { return entries_.size() > 1 ? entries_[1] : 0; }
  /// h_e; equals the type when the vector is level.
  std::int64_t last() const noexcept { return entries_.back(); }

  std::size_t size() const noexcept { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_.at(i); }
  std::span<const std::int64_t> entries() const noexcept { return entries_; }

  bool is_symmetric() const noexcept;

  /// Copy with entry `degree` replaced.
  HVector with_entry(std::size_t degree, std::int64_t value) const;
  /// First `degree + 1` entries.
  HVector prefix(std::size_t degree) const;

  std::string to_string() const;

  friend bool operator==(const HVector&, const HVector&) = default;
  friend auto operator<=>(const HVector&, const HVector&) = default;

 private:
  void validate();

  std::vector<std::int64_t> entries_;
};

std::string to_string(std::span<const std::int64_t> values);

}  // namespace levellab
