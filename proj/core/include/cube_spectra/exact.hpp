#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace cube {

using BigInt = boost::multiprecision::cpp_int;

/// binom(n, k); zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

/// Nearest double to value * 2^exp2, valid far beyond double's exponent range
/// for either factor alone.
double to_double_scaled(const BigInt& value, long exp2 = 0);

inline double to_double(const BigInt& value) { return to_double_scaled(value, 0); }

}  // namespace cube
