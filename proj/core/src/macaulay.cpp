#include "levellab/macaulay/macaulay.hpp"

#include "levellab/error.hpp"

namespace levellab::macaulay {

BigInt binomial(const BigInt& n, std::uint64_t k) {
  if (n < 0) throw InvalidArgument("binomial: negative top index " + n.str());
  if (n < k) return 0;
  BigInt result = 1;
  // C(n, k) = prod_{j=1..k} (n - k + j) / j; every prefix is an exact binomial.
  for (std::uint64_t j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;
  }
  return result;
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  return binomial(BigInt(n), k);
}

BigInt ring_dimension(std::uint64_t r, std::uint64_t d) {
  if (r == 0) return d == 0 ? 1 : 0;
  return binomial(r + d - 1, d);
}

BinomialExpansion::BinomialExpansion(std::int64_t degree, std::vector<BinomialTerm> terms)
    : degree_(degree), terms_(std::move(terms)) {
  if (degree_ < 1) throw InvalidArgument("binomial expansion degree must be positive");
  std::int64_t expected_bottom = degree_;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& term = terms_[k];
    if (term.bottom != expected_bottom || term.bottom < 1 || term.top < term.bottom ||
        (k > 0 && !(terms_[k - 1].top > term.top))) {
      throw InvalidArgument("malformed binomial expansion term C(" + term.top.str() + "," +
                            std::to_string(term.bottom) + ")");
    }
    --expected_bottom;
  }
}

BigInt BinomialExpansion::value() const {
  BigInt sum = 0;
  for (const auto& term : terms_) sum += binomial(term.top, static_cast<std::uint64_t>(term.bottom));
  return sum;
}

std::string BinomialExpansion::to_string() const {
  std::string out;
  for (const auto& term : terms_) {
    if (!out.empty()) out += '+';
    out += "C(" + term.top.str() + "," + std::to_string(term.bottom) + ")";
  }
  return out;
}

namespace {

// Largest m >= k with C(m, k) <= bound (bound >= 1).
BigInt largest_top(const BigInt& bound, std::uint64_t k) {
  BigInt lo = k;  // C(k, k) = 1 <= bound
  BigInt step = 1;
  BigInt hi = lo + step;
  while (binomial(hi, k) <= bound) {
    lo = hi;
    step *= 2;
    hi = lo + step;
  }
  // invariant: C(lo, k) <= bound < C(hi, k)
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (binomial(mid, k) <= bound) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

}  // namespace

BinomialExpansion binomial_expansion(const BigInt& n, std::int64_t i) {
  if (n < 1) throw InvalidArgument("binomial_expansion: n must be positive, got " + n.str());
  if (i < 1) throw InvalidArgument("binomial_expansion: degree must be positive");
  std::vector<BinomialTerm> terms;
  BigInt remaining = n;
  for (std::int64_t k = i; k >= 1 && remaining > 0; --k) {
    BigInt top = largest_top(remaining, static_cast<std::uint64_t>(k));
    remaining -= binomial(top, static_cast<std::uint64_t>(k));
    terms.push_back({std::move(top), k});
  }
  return BinomialExpansion(i, std::move(terms));
}

BigInt shift_expansion(const BinomialExpansion& expansion, std::int64_t a) {
  BigInt sum = 0;
  for (const auto& term : expansion.terms()) {
    const std::int64_t bottom = term.bottom + a;
    if (bottom < 0) {
      throw InvalidArgument("shift by " + std::to_string(a) + " makes C(" + term.top.str() +
                            "," + std::to_string(term.bottom) + ") reach a negative lower index");
    }
    sum += binomial(term.top + a, static_cast<std::uint64_t>(bottom));
  }
  return sum;
}

BigInt macaulay_upper_bound(const BigInt& n, std::int64_t d) {
  if (d < 1) throw InvalidArgument("macaulay_upper_bound: degree must be positive");
  if (n < 0) throw InvalidArgument("macaulay_upper_bound: negative value");
  if (n == 0) return 0;
  return shift_expansion(binomial_expansion(n, d), 1);
}

std::optional<GrowthViolation> first_growth_violation(std::span<const std::int64_t> values) {
  if (values.empty()) return std::nullopt;
  if (values[0] != 1) return GrowthViolation{0, values[0], 1};
  for (std::size_t d = 1; d < values.size(); ++d) {
    if (values[d] < 0) return GrowthViolation{d - 1, values[d], 0};
  }
  // h_0 = 1 imposes nothing on h_1.
  for (std::size_t d = 1; d + 1 < values.size(); ++d) {
    BigInt bound = macaulay_upper_bound(values[d], static_cast<std::int64_t>(d));
    if (values[d + 1] > bound) return GrowthViolation{d, values[d + 1], std::move(bound)};
  }
  return std::nullopt;
}

bool is_o_sequence(std::span<const std::int64_t> values) {
  return !first_growth_violation(values).has_value();
}

bool is_o_sequence(const HVector& h) { return is_o_sequence(h.entries()); }

std::vector<std::int64_t> first_difference(const HVector& h) {
  const std::size_t half = h.socle_degree() / 2;
  std::vector<std::int64_t> diff{1};
  for (std::size_t i = 1; i <= half; ++i) diff.push_back(h[i] - h[i - 1]);
  return diff;
}

bool is_si_sequence(const HVector& h) {
  return h.is_symmetric() && is_o_sequence(first_difference(h));
}

}  // namespace levellab::macaulay
