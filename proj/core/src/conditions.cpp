#include "levellab/lab/conditions.hpp"

#include "levellab/bounds/bounds.hpp"
#include "levellab/error.hpp"
#include "levellab/macaulay/macaulay.hpp"

namespace levellab::lab {

namespace {

BigInt choose(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) return 0;
  return macaulay::binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
}

std::string entry_name(std::size_t i) { return "h_" + std::to_string(i); }

std::optional<Violation> ring_cap(const HVector& h) {
  const std::int64_t r = h.codimension();
  for (std::size_t i = 2; i < h.size(); ++i) {
    const BigInt cap = choose(r + static_cast<std::int64_t>(i) - 1, static_cast<std::int64_t>(i));
    if (h[i] > cap) {
      return Violation{"ring-cap", entry_name(i) + " = " + std::to_string(h[i]) +
                                       " exceeds dim R_" + std::to_string(i) + " = " + cap.str()};
    }
  }
  return std::nullopt;
}

std::optional<Violation> o_sequence(const HVector& h) {
  auto v = macaulay::first_growth_violation(h.entries());
  if (!v) return std::nullopt;
  return Violation{"o-sequence", "growth " + std::to_string(v->degree) + "->" +
                                     std::to_string(v->degree + 1) + ": " + v->value.str() +
                                     " exceeds bound " + v->bound.str()};
}

std::optional<Violation> ci_range(const HVector& h) {
  const std::size_t e = h.socle_degree();
  if (e < 1) return std::nullopt;
  const std::int64_t r = h.codimension();
  const auto range = bounds::ci_prev_range(h.last(), static_cast<std::int64_t>(e), r);
  const BigInt value = h[e - 1];
  if (range.contains(value)) return std::nullopt;
  std::string detail = entry_name(e - 1) + " = " + value.str();
  if (value < range.lo) {
    detail += " is below the least admissible value " + range.lo.str();
  } else if (range.hi == BigInt(r) * h.last()) {
    detail += " > r*t = " + range.hi.str();
  } else {
    detail += " > " + range.hi.str();
  }
  return Violation{"ci-range", detail};
}

std::optional<Violation> derivative_cap(const HVector& h) {
  const auto e = static_cast<std::int64_t>(h.socle_degree());
  if (e == 0) return std::nullopt;
  const std::int64_t r = h.codimension();
  const BigInt t = h.last();
  for (std::int64_t i = 0; i <= e; ++i) {
    const BigInt cap = t * choose(r + e - i - 1, e - i);
    if (h[static_cast<std::size_t>(i)] > cap) {
      return Violation{"derivative-cap",
                       entry_name(static_cast<std::size_t>(i)) + " = " +
                           std::to_string(h[static_cast<std::size_t>(i)]) + " exceeds t*dim R_" +
                           std::to_string(e - i) + " = " + cap.str()};
    }
  }
  return std::nullopt;
}

std::optional<Violation> gorenstein_symmetry(const HVector& h) {
  if (h.last() != 1 || h.is_symmetric()) return std::nullopt;
  return Violation{"gorenstein-symmetry", "type 1 but " + h.to_string() + " is not symmetric"};
}

std::optional<Violation> stanley_si(const HVector& h) {
  if (h.last() != 1 || h.codimension() > 3 || macaulay::is_si_sequence(h)) return std::nullopt;
  return Violation{"stanley-si", "type 1 in codimension " + std::to_string(h.codimension()) +
                                     " but not an SI-sequence"};
}

}  // namespace

const std::vector<std::string>& condition_names() {
  static const std::vector<std::string> names{"ring-cap",       "o-sequence",
                                              "ci-range",       "derivative-cap",
                                              "gorenstein-symmetry", "stanley-si"};
  return names;
}

std::optional<Violation> check_condition(std::string_view condition, const HVector& h) {
  if (condition == "ring-cap") return ring_cap(h);
  if (condition == "o-sequence") return o_sequence(h);
  if (condition == "ci-range") return ci_range(h);
  if (condition == "derivative-cap") return derivative_cap(h);
  if (condition == "gorenstein-symmetry") return gorenstein_symmetry(h);
  if (condition == "stanley-si") return stanley_si(h);
  throw InvalidArgument("unknown condition '" + std::string(condition) + "'");
}

std::optional<Violation> first_violation(const HVector& h) {
  for (const auto& name : condition_names()) {
    if (auto v = check_condition(name, h)) return v;
  }
  return std::nullopt;
}

bool stanley_classification_applies(const HVector& h) {
  return h.last() == 1 && h.codimension() <= 3 && macaulay::is_si_sequence(h);
}

}  // namespace levellab::lab
