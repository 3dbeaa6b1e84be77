#include "levellab/bounds/bounds.hpp"

#include "levellab/error.hpp"
#include "levellab/macaulay/macaulay.hpp"

#include <algorithm>

namespace levellab::bounds {

using macaulay::binomial;

namespace {

BigInt choose(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0) return 0;
  return binomial(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(k));
}

void require_positive(std::int64_t value, const char* what) {
  if (value < 1) throw InvalidArgument(std::string(what) + " must be positive");
}

}  // namespace

BigInt bg_min_prev(const BigInt& h_d, std::int64_t d) {
  if (d < 1) throw InvalidArgument("bg_min_prev: degree must be positive");
  if (h_d < 1) throw InvalidArgument("bg_min_prev: entry must be positive");
  return macaulay::shift_expansion(macaulay::binomial_expansion(h_d, d), -1);
}

IntRange ci_prev_range(const BigInt& h_d, std::int64_t d, std::int64_t r) {
  require_positive(r, "codimension");
  const BigInt ring_cap = choose(r + d - 2, d - 1);
  const BigInt derivative_cap = h_d * r;
  return {bg_min_prev(h_d, d), std::min(ring_cap, derivative_cap)};
}

std::vector<std::int64_t> ia2_lower_bound(const HVector& h, std::span<const std::int64_t> d) {
  const std::size_t e = h.socle_degree();
  if (d.size() != e + 1) {
    throw InvalidArgument("need d_0..d_e (" + std::to_string(e + 1) + " values), got " +
                          std::to_string(d.size()));
  }
  std::vector<std::int64_t> bound;
  for (std::size_t i = 0; i <= e; ++i) bound.push_back(std::max<std::int64_t>(h[e - i] - d[i], 0));
  return bound;
}

QuotientBound za_lower_bound(const HVector& h, std::int64_t t, std::int64_t c) {
  if (t != h.last()) {
    throw InvalidArgument("type " + std::to_string(t) + " does not match h_e = " +
                          std::to_string(h.last()));
  }
  if (t < 2) throw HypothesisError("quotient bound", "needs type t >= 2");
  if (c < 1 || c > t) {
    throw HypothesisError("quotient bound", "quotient type c must lie in 1.." + std::to_string(t));
  }
  const std::size_t e = h.socle_degree();
  QuotientBound out;
  out.exact.emplace_back(1);
  out.ceilings.emplace_back(1);
  const Rational denominator = Rational(t * t - 1);
  for (std::size_t i = 1; i <= e; ++i) {
    Rational value = Rational(BigInt(t - c) * h[e - i] + BigInt(c * t - 1) * h[i]) / denominator;
    out.ceilings.push_back(levellab::ceil(value));
    out.exact.push_back(std::move(value));
  }
  return out;
}

bool thm3_step(std::int64_t r, std::int64_t a, std::int64_t t) {
  const BigInt lower = BigInt(t) * (r - 2 * t) + 3;
  const BigInt upper = choose(r + 1, 2) - 1;
  const BigInt r_floor = BigInt(t) * (a - t) + 2;
  return lower <= a && a <= upper && r >= r_floor;
}

IntRange cor3_interval(std::int64_t r, std::int64_t a, std::int64_t t) {
  require_positive(r, "codimension");
  require_positive(a, "degree-2 entry");
  require_positive(t, "type");
  if (2 * t < r) {
    throw HypothesisError("socle-3 iterated step", "needs t >= r/2, got r=" + std::to_string(r) +
                                                       " t=" + std::to_string(t));
  }
  const BigInt top = std::min(BigInt(t + 1), choose(r + 1, 2));
  return {a, std::max(BigInt(a), top)};
}

IntRange thm33_interval(std::int64_t r, std::int64_t a, std::int64_t t) {
  require_positive(r, "codimension");
  require_positive(a, "degree-2 entry");
  require_positive(t, "type");
  if (t < r - 2) {
    throw HypothesisError("socle-3 interval", "needs t >= r-2, got r=" + std::to_string(r) +
                                                  " t=" + std::to_string(t));
  }
  const BigInt top = std::min(BigInt(r) * t, choose(r + 1, 2));
  return {a, std::max(BigInt(a), top)};
}

BigInt prop2_min_r(const BigInt& t) { return bg_min_prev(t, 2); }

IntRange prop2_t_range(std::int64_t r) {
  require_positive(r, "codimension");
  return {1, choose(r + 1, 2)};
}

IntRange prop_e_t_range(std::int64_t r, std::int64_t e) {
  require_positive(r, "codimension");
  require_positive(e, "socle degree");
  const Rational lower = Rational(choose(r + e - 2, e - 1)) / r;
  return {levellab::ceil(lower), choose(r + e - 1, e)};
}

std::vector<BigInt> thm_ee_margins(const HVector& h) {
  const std::size_t e = h.socle_degree();
  const BigInt t = h.last();
  std::vector<BigInt> margins;
  for (std::size_t i = 1; i + 1 <= e; ++i) margins.push_back(h[e - i] + t * t - t * h[i] - 1);
  return margins;
}

bool thm_ee_step(const HVector& h) {
  const auto margins = thm_ee_margins(h);
  return std::all_of(margins.begin(), margins.end(), [](const BigInt& m) { return m > 0; });
}

IntRange eecor_interval(const HVector& h) {
  const std::size_t e = h.socle_degree();
  if (e < 2) throw HypothesisError("type interval", "needs socle degree >= 2");
  std::int64_t interior_max = 0;
  for (std::size_t i = 1; i < e; ++i) interior_max = std::max(interior_max, h[i]);
  if (h.last() < interior_max) {
    throw HypothesisError("type interval", "needs h_e = " + std::to_string(h.last()) +
                                               " >= max interior entry " +
                                               std::to_string(interior_max));
  }
  return {interior_max - 1, h.last()};
}

GorensteinInterval thm_gor_interval(const HVector& h) {
  const std::size_t e = h.socle_degree();
  if (e < 2) throw HypothesisError("Gorenstein interval", "needs socle degree >= 2");
  if (h.last() != 1 || !h.is_symmetric()) {
    throw HypothesisError("Gorenstein interval", h.to_string() + " is not a symmetric type-1 vector");
  }
  const std::int64_t r = h.codimension();
  const std::size_t half = e / 2;
  for (std::size_t j = 1; j < half; ++j) {
    if (BigInt(h[j]) != choose(r + static_cast<std::int64_t>(j) - 1, static_cast<std::int64_t>(j))) {
      throw HypothesisError("Gorenstein interval",
                            "entry h_" + std::to_string(j) + " = " + std::to_string(h[j]) +
                                " is not maximal");
    }
  }
  GorensteinInterval out;
  out.degrees = {half};
  if (e % 2 == 1) out.degrees.push_back(half + 1);
  const auto top = choose(r + static_cast<std::int64_t>(half) - 1, static_cast<std::int64_t>(half));
  out.range = {h[half], std::max(BigInt(h[half]), top)};
  return out;
}

IntRange corgor_interval(std::int64_t r, std::int64_t a) {
  require_positive(r, "codimension");
  require_positive(a, "middle entry");
  const BigInt top = choose(r + 1, 2);
  if (a > top) {
    throw HypothesisError("socle-4 Gorenstein interval",
                          "middle entry exceeds C(r+1,2) = " + top.str());
  }
  return {a, top};
}

bool si_interval_closure(const HVector& low, const HVector& high, std::size_t i) {
  const std::size_t e = low.socle_degree();
  if (high.socle_degree() != e) throw HypothesisError("SI closure", "endpoints differ in socle degree");
  if (i < 1 || i > e / 2) {
    throw HypothesisError("SI closure", "degree must lie in 1..floor(e/2)");
  }
  const std::size_t mirror = e - i;
  const std::int64_t alpha = high[i] - low[i];
  for (std::size_t j = 0; j <= e; ++j) {
    const std::int64_t expected = (j == i || j == mirror) ? alpha : 0;
    if (high[j] - low[j] != expected) {
      throw HypothesisError("SI closure", "endpoints must differ only in degrees " +
                                              std::to_string(i) + " and " +
                                              std::to_string(mirror) + " by one common amount");
    }
  }
  if (alpha < 0) throw HypothesisError("SI closure", "high endpoint lies below low endpoint");
  if (!macaulay::is_si_sequence(low) || !macaulay::is_si_sequence(high)) {
    throw HypothesisError("SI closure", "both endpoints must be SI-sequences");
  }
  for (std::int64_t beta = 0; beta <= alpha; ++beta) {
    HVector bumped = low.with_entry(i, low[i] + beta).with_entry(mirror, low[mirror] + beta);
    if (!macaulay::is_si_sequence(bumped)) return false;
  }
  return true;
}

}  // namespace levellab::bounds
