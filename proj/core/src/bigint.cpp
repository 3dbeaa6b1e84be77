#include "levellab/bigint.hpp"

#include "levellab/error.hpp"

#include <limits>

namespace levellab {

BigInt ceil(const Rational& q) {
  BigInt num = boost::multiprecision::numerator(q);
  BigInt den = boost::multiprecision::denominator(q);
  BigInt quotient = num / den;  // truncates toward zero
  if (quotient * den != num && num > 0) ++quotient;
  return quotient;
}

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() ||
      value < std::numeric_limits<std::int64_t>::min()) {
    throw InvalidArgument("integer " + value.str() + " exceeds 64-bit range");
  }
  return value.convert_to<std::int64_t>();
}

std::string to_string(const Rational& value) {
  BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return boost::multiprecision::numerator(value).str();
  return boost::multiprecision::numerator(value).str() + "/" + den.str();
}

}  // namespace levellab
