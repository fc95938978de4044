#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "overlap_lab/errors.hpp"
#include "overlap_lab/numeric.hpp"

namespace overlap_lab {

/// Memoized exact evaluation of the pair-counting recurrences for a fixed
/// alphabet size k.
///
/// All tables grow on demand and every entry equals a fresh recomputation.
/// An instance is not synchronized: confine it to one thread, or give each
/// thread its own.
class CountCache {
 public:
  explicit CountCache(std::uint32_t k);

  std::uint32_t k() const noexcept { return k_; }

  /// Number of length-n unbordered words, via Nielsen's recurrence
  /// u_0 = 1, u_n = k u_{n-1} - [n even] u_{n/2}.
  BigCount unbordered(std::uint32_t n);

  /// Number of length-n bordered words, sum_{i=1}^{n/2} u_i k^{n-2i}.
  BigCount bordered(std::uint32_t n);

  /// G_t(n): length-n unbordered words whose length-t prefix and suffix are
  /// a fixed mutually unbordered pair of distinct words. Requires k >= 2.
  BigCount g(std::uint32_t t, std::uint32_t n);

  /// Ordered pairs of length-n words that are mutually bordered.
  BigCount mutually_bordered(std::uint32_t n);
  /// Ordered pairs of length-n words with a right-border but no left-border.
  BigCount right_bordered(std::uint32_t n);
  /// Ordered pairs of length-n words with neither border, k^{2n} - 2R - M.
  BigCount mutually_unbordered(std::uint32_t n);

  /// Ordered pairs of length-n words whose shortest right-border has length
  /// i, for 1 <= i <= n-1.
  BigCount s(std::uint32_t i, std::uint32_t n);

  /// Exact mean of lso(u,v) over all k^{2n} ordered pairs of length-n words.
  ExactRational expected_lso(std::uint32_t n);

 private:
  BigCount k_power(std::uint32_t e);
  void fill_unbordered(std::uint32_t n);
  const std::vector<BigCount>& g_row(std::uint32_t t, std::uint32_t n);

  std::uint32_t k_;
  std::vector<BigCount> k_powers_;
  std::vector<BigCount> u_;
  std::map<std::uint32_t, std::vector<BigCount>> g_;
  std::map<std::uint32_t, BigCount> m_;
  std::map<std::uint32_t, BigCount> r_;
  std::map<std::uint32_t, BigCount> pair_u_;
};

BigCount unbordered_count(std::uint32_t k, std::uint32_t n);
BigCount bordered_count(std::uint32_t k, std::uint32_t n);
BigCount g_count(std::uint32_t k, std::uint32_t t, std::uint32_t n);
BigCount mutually_bordered_count(std::uint32_t k, std::uint32_t n);
BigCount right_bordered_count(std::uint32_t k, std::uint32_t n);
BigCount mutually_unbordered_count(std::uint32_t k, std::uint32_t n);
BigCount s_count(std::uint32_t k, std::uint32_t i, std::uint32_t n);
ExactRational expected_lso_finite(std::uint32_t k, std::uint32_t n);

}  // namespace overlap_lab
