#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "overlap_lab/numeric.hpp"

namespace overlap_lab {

/// Closed interval [lo, hi] of exact rationals.
struct RatInterval {
  ExactRational lo;
  ExactRational hi;

  ExactRational width() const { return hi - lo; }
  ExactRational midpoint() const { return (lo + hi) / 2; }
  bool contains(const ExactRational& x) const { return lo <= x && x <= hi; }
};

enum class LimitQuantity { MLimit, RLimit, ULimit, ExpectedLso, UnborderedDensity };

std::string_view to_string(LimitQuantity q) noexcept;

struct LimitReport {
  std::uint32_t k = 0;
  std::uint32_t terms = 0;
  LimitQuantity quantity = LimitQuantity::MLimit;
  RatInterval interval;
  unsigned precision = 0;
  /// Midpoint rounded to `precision` decimals. Only meaningful when
  /// `certified` is set.
  std::string decimal;
  /// Interval width is below half a unit in the last printed place.
  bool certified = false;
};

// Each limit below is bracketed through T = sum_{i>=1} u_i k^{-2i}, known to
// lie in [T_n, T_n + k^{-n}/(k-1)] where T_n is the n-term partial sum.

/// Bracket for T itself.
RatInterval series_bracket(std::uint32_t k, std::uint32_t terms);

/// lim M_k(n)/k^{2n} = T^2.
RatInterval limit_M(std::uint32_t k, std::uint32_t terms);

/// lim R_k(n)/k^{2n} = T - T^2. Follows from dividing the right-bordered
/// recurrence by k^{2n} and using lim M_k(n)/k^{2n} = T^2.
RatInterval limit_R(std::uint32_t k, std::uint32_t terms);

/// lim U_k(n)/k^{2n} = 1 - 2(T - T^2) - T^2 = (1 - T)^2.
RatInterval limit_U(std::uint32_t k, std::uint32_t terms);

/// lim E[lso(u,v)] = sum_{i>=1} i u_i k^{-2i}, bracketed with the tail
/// sum_{i>n} i k^{-i} = k^{-n} (k(n+1) - n)/(k-1)^2.
RatInterval expected_lso_limit(std::uint32_t k, std::uint32_t terms);

/// u_n / k^n. Tends to Nielsen's constant (about 0.267786 for k = 2).
ExactRational unbordered_density(std::uint32_t k, std::uint32_t n);

/// Evaluates `quantity` and renders it. For UnborderedDensity the interval is
/// the single exact value at n = terms.
LimitReport limit_report(LimitQuantity quantity, std::uint32_t k, std::uint32_t terms,
                         unsigned precision);

}  // namespace overlap_lab
