#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace overlap_lab {

/// Exact non-negative count. Values reach k^(2n), far past 64 bits.
using BigCount = boost::multiprecision::cpp_int;

/// Exact rational, always held in lowest terms with a positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;

BigCount power(std::uint64_t base, std::uint64_t exponent);

inline std::string to_string(const BigCount& n) { return n.str(); }

/// "p/q", or just "p" when q == 1.
std::string to_string(const ExactRational& q);

/// Rounds q to `digits` decimals, halves rounding away from zero.
std::string to_decimal(const ExactRational& q, unsigned digits);

}  // namespace overlap_lab
