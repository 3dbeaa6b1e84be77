#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace levellab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Smallest integer >= q.
BigInt ceil(const Rational& q);

/// Narrowing conversion; throws InvalidArgument when `value` does not fit.
std::int64_t to_int64(const BigInt& value);

inline std::string to_string(const BigInt& value) { return value.str(); }
std::string to_string(const Rational& value);

}  // namespace levellab
