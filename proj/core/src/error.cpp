#include "levellab/error.hpp"

namespace levellab {

std::string_view to_string(ErrorCategory category) noexcept {
  switch (category) {
    case ErrorCategory::InvalidArgument: return "invalid-argument";
    case ErrorCategory::Parse: return "parse";
    case ErrorCategory::Hypothesis: return "hypothesis";
    case ErrorCategory::DependentGenerators: return "dependent-generators";
    case ErrorCategory::Soundness: return "soundness";
    case ErrorCategory::Io: return "io";
  }
  return "unknown";
}

}  // namespace levellab
