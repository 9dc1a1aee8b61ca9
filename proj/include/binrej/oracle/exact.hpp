#pragma once

// Arbitrary-precision arithmetic for the verification oracle only. Nothing on
// the sampling path includes this header.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace binrej::oracle {

using BigInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

/// C(n, k), zero outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// (a+b+c)! / (a! b! c!), zero if any part is negative.
BigInt multinomial(std::int64_t a, std::int64_t b, std::int64_t c);

inline ExactRational ratio(std::int64_t num, std::int64_t den) { return ExactRational(num, den); }

}  // namespace binrej::oracle
