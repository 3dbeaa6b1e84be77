#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace levellab {

/// Coarse failure classes. The CLI prints these as `error[<name>]` so callers
/// can dispatch on them without parsing messages.
enum class ErrorCategory {
  InvalidArgument,
  Parse,
  Hypothesis,
  DependentGenerators,
  Soundness,
  Io,
};

std::string_view to_string(ErrorCategory category) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& message)
      : Error(ErrorCategory::InvalidArgument, message) {}
};

/// Malformed form text or generator file. `position` is a 0-based byte offset
/// into the offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& cause)
      : Error(ErrorCategory::Parse,
              "at position " + std::to_string(position) + ": " + cause),
        position_(position),
        cause_(cause) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& cause() const noexcept { return cause_; }

 private:
  std::size_t position_;
  std::string cause_;
};

/// A conditional statement was invoked outside its hypotheses. Distinct from an
/// empty result: the theorem is silent, not negative.
class HypothesisError : public Error {
 public:
  HypothesisError(std::string theorem, const std::string& detail)
      : Error(ErrorCategory::Hypothesis, theorem + ": " + detail),
        theorem_(std::move(theorem)) {}

  const std::string& theorem() const noexcept { return theorem_; }

 private:
  std::string theorem_;
};

class DependentGenerators : public Error {
 public:
  DependentGenerators(std::size_t count, std::size_t rank)
      : Error(ErrorCategory::DependentGenerators,
              std::to_string(count) + " generators span only a " +
                  std::to_string(rank) + "-dimensional space"),
        count_(count),
        rank_(rank) {}

  std::size_t count() const noexcept { return count_; }
  std::size_t rank() const noexcept { return rank_; }

 private:
  std::size_t count_;
  std::size_t rank_;
};

/// Internal invariant broken (e.g. an asymmetric Gorenstein profile). Always a
/// bug in this library, never a mathematical finding.
class SoundnessError : public Error {
 public:
  explicit SoundnessError(const std::string& message)
      : Error(ErrorCategory::Soundness, message) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& message) : Error(ErrorCategory::Io, message) {}
};

}  // namespace levellab
