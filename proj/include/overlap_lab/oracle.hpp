#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "overlap_lab/numeric.hpp"
#include "overlap_lab/word.hpp"

namespace overlap_lab {

/// Exhaustive ground truth by enumerating every ordered pair of words.
///
/// Nothing here uses the counting recurrences; every number is obtained by
/// classifying concrete pairs, so the two can be checked against each other.

inline constexpr std::uint64_t kDefaultPairBudget = std::uint64_t{1} << 34;
inline constexpr std::size_t kDefaultViolationCap = 16;

struct EnumerationOptions {
  /// Largest number of ordered pairs an enumeration may visit.
  std::uint64_t pair_budget = kDefaultPairBudget;
  /// Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 1;
  /// Violations retained per report. `checked` stays exact regardless.
  std::size_t max_violations = kDefaultViolationCap;
};

/// Class counts over all k^m * k^n ordered pairs (u, v), |u| = m, |v| = n.
struct PairCensus {
  std::uint32_t k = 0;
  std::uint32_t m = 0;
  std::uint32_t n = 0;
  BigCount mutually_bordered = 0;
  BigCount right_bordered = 0;
  BigCount left_bordered = 0;
  BigCount mutually_unbordered = 0;
};

struct Violation {
  Word u;
  Word v;
  std::string reason;
};

struct ViolationReport {
  std::uint64_t checked = 0;
  std::vector<Violation> violations;
  /// Largest lso(u,v) + lso(v,u) seen among the checked pairs.
  std::size_t max_overlap_sum = 0;

  bool ok() const noexcept { return violations.empty(); }
};

/// Throws BudgetExceeded if k^(m+n) exceeds the budget.
void check_budget(std::uint32_t k, std::uint32_t m, std::uint32_t n,
                  const EnumerationOptions& options);

PairCensus enumerate_pair_census(std::uint32_t k, std::uint32_t m, std::uint32_t n,
                                 const EnumerationOptions& options = {});

/// For every pair of length-n words and each right-border w of the pair:
/// w is the shortest right-border iff w is unbordered.
ViolationReport verify_shortest_unbordered(std::uint32_t k, std::uint32_t n,
                                           const EnumerationOptions& options = {});

/// Checks the factorizations of every mutually bordered pair of length-n
/// words. With i = lso(u,v), j = lso(v,u), x = so(v,u), y = so(u,v):
///  - i + j <= n: u = x s y and v = y t x with x, y unbordered;
///  - i + j >  n: i + j <= 4n/3, u = x s y t x and v = y t x s y with
///    |x| = |y| = i + j - n, x != y, (x, y) mutually unbordered, and both
///    x s y and y t x unbordered.
ViolationReport verify_decomposition(std::uint32_t k, std::uint32_t n,
                                     const EnumerationOptions& options = {});

/// Maximum of lso(u,v) + lso(v,u) over all pairs of length-n words.
std::size_t max_overlap_sum(std::uint32_t k, std::uint32_t n,
                            const EnumerationOptions& options = {});

/// Binary pair of length n >= 3 whose overlap sum is floor(4n/3).
std::pair<Word, Word> extremal_pair(std::uint32_t n);

/// Histogram of lso(u,v) over all pairs of length-n words; keys 0..n-1, all
/// present.
std::map<std::size_t, BigCount> census_by_lso(std::uint32_t k, std::uint32_t n,
                                               const EnumerationOptions& options = {});

}  // namespace overlap_lab
