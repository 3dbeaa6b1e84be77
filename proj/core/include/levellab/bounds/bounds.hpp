#pragma once

#include "levellab/bigint.hpp"
#include "levellab/macaulay/hvector.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace levellab::bounds {

/// Closed integer interval [lo, hi].
struct IntRange {
  BigInt lo;
  BigInt hi;

  bool empty() const { return hi < lo; }
  bool contains(const BigInt& v) const { return lo <= v && v <= hi; }
  std::string to_string() const { return lo.str() + ".." + hi.str(); }

  friend bool operator==(const IntRange&, const IntRange&) = default;
};

/// Least possible h_{d-1} for a given h_d: ((h_d)_(d))^{-1}_{-1}.
BigInt bg_min_prev(const BigInt& h_d, std::int64_t d);

/// Admissible h_{d-1} for a level algebra of socle degree d and codimension r:
/// [bg_min_prev(h_d, d), min{C(r+d-2, d-1), r * h_d}]. May be empty, which
/// rules out every level vector with that tail.
IntRange ci_prev_range(const BigInt& h_d, std::int64_t d, std::int64_t r);

/// Entrywise max{h_{e-i} - d_i, 0}, i = 0..e: lower bound for the generic
/// Gorenstein quotient of a type-2 module with common-derivative dims d.
std::vector<std::int64_t> ia2_lower_bound(const HVector& h, std::span<const std::int64_t> d);

struct QuotientBound {
  std::vector<Rational> exact;    // i = 0..e; entry 0 is 1
  std::vector<BigInt> ceilings;   // h-vector entries are integers
};

/// ((t-c) h_{e-i} + (ct-1) h_i) / (t^2-1) for the generic type-c quotient of a
/// type-t level algebra. Requires t = h_e >= 2 and 1 <= c <= t (c = t gives h).
QuotientBound za_lower_bound(const HVector& h, std::int64_t t, std::int64_t c);

/// Hypotheses t(r-2t)+3 <= a <= C(r+1,2)-1 and r >= t(a-t)+2 under which
/// (1,r,a,t) level implies (1,r,a+1,t) level.
bool thm3_step(std::int64_t r, std::int64_t a, std::int64_t t);

/// b in a..min{t+1, C(r+1,2)} for level (1,r,a,t) with 2t >= r. Throws
/// HypothesisError when 2t < r.
IntRange cor3_interval(std::int64_t r, std::int64_t a, std::int64_t t);

/// b in a..min{r t, C(r+1,2)} for level (1,r,a,t) with t >= r-2. Throws
/// HypothesisError otherwise.
IntRange thm33_interval(std::int64_t r, std::int64_t a, std::int64_t t);

/// Least codimension r for which (1,r,t) is level: (t_(2))^{-1}_{-1}.
BigInt prop2_min_r(const BigInt& t);
/// Types t with (1,r,t) level: 1..C(r+1,2).
IntRange prop2_t_range(std::int64_t r);

/// Types t for which the maximal-prefix vector (1, r, ..., C(r+e-2,e-1), t) is
/// level: ceil(C(r+e-2,e-1)/r)..C(r+e-1,e).
IntRange prop_e_t_range(std::int64_t r, std::int64_t e);

/// Per-degree values h_{e-i} + t^2 - t h_i - 1 for i = 1..e-1.
std::vector<BigInt> thm_ee_margins(const HVector& h);
/// True when every margin is positive, so (1,h_1,...,h_{e-1},t-1) is level.
bool thm_ee_step(const HVector& h);

/// Types M-1..t_0 reachable from level h with t_0 = h_e >= M = max interior
/// entry. Throws HypothesisError when t_0 < M or e < 2.
IntRange eecor_interval(const HVector& h);

struct GorensteinInterval {
  std::vector<std::size_t> degrees;  // the middle degree, or the middle pair
  IntRange range;
};

/// Middle entry (even e) or middle pair (odd e) values for which a Gorenstein
/// h with maximal entries below the middle stays Gorenstein. Throws
/// HypothesisError when h is not symmetric, not of type 1, e < 2, or some
/// entry below the middle differs from C(r+j-1, j).
GorensteinInterval thm_gor_interval(const HVector& h);

/// a..C(r+1,2) for Gorenstein (1,r,a,r,1).
IntRange corgor_interval(std::int64_t r, std::int64_t a);

/// Both endpoints must be SI-sequences differing only in degrees i and e-i by
/// the same alpha >= 0 (HypothesisError otherwise). True when every
/// intermediate bump is an SI-sequence.
bool si_interval_closure(const HVector& low, const HVector& high, std::size_t i);

}  // namespace levellab::bounds
