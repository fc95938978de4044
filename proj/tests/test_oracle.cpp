#include "doctest.h"
#include "overlap_lab/counting.hpp"
#include "overlap_lab/oracle.hpp"
#include "published_tables.hpp"
#include "test_support.hpp"

using namespace overlap_lab;
using overlap_lab::testing::bin;

TEST_CASE("enumerate_pair_census examples") {
  const PairCensus c = enumerate_pair_census(2, 3, 4);
  CHECK(c.mutually_bordered == 50);
  CHECK(c.right_bordered == 30);
  CHECK(c.mutually_unbordered == 18);
  CHECK(c.mutually_bordered + c.right_bordered + c.left_bordered + c.mutually_unbordered == 128);

  const PairCensus one = enumerate_pair_census(2, 1, 1);
  CHECK(one.mutually_unbordered == 4);
  CHECK(one.mutually_bordered == 0);
  CHECK(one.right_bordered == 0);
  CHECK(one.left_bordered == 0);

  CHECK(enumerate_pair_census(2, 8, 8).mutually_bordered == 34996);
}

TEST_CASE("census matches published tables, 1 <= m, n <= 6") {
  using namespace overlap_lab::testing;
  for (std::uint32_t m = 1; m <= 6; ++m)
    for (std::uint32_t n = 1; n <= 6; ++n) {
      const PairCensus c = enumerate_pair_census(2, m, n);
      CHECK(c.mutually_bordered == kMutuallyBordered2[m - 1][n - 1]);
      CHECK(c.right_bordered == kRightBordered2[m - 1][n - 1]);
      CHECK(c.mutually_unbordered == kMutuallyUnbordered2[m - 1][n - 1]);
    }
}

TEST_CASE("census invariants") {
  for (std::uint32_t m = 1; m <= 5; ++m)
    for (std::uint32_t n = 1; n <= 5; ++n) {
      const PairCensus a = enumerate_pair_census(3, m, n);
      const PairCensus b = enumerate_pair_census(3, n, m);
      CHECK(a.right_bordered == b.left_bordered);
      CHECK(a.mutually_bordered == b.mutually_bordered);
      CHECK(a.mutually_bordered + a.right_bordered + a.left_bordered + a.mutually_unbordered == power(3, m + n));
      if (m == n) CHECK(a.right_bordered == a.left_bordered);
    }
}

TEST_CASE("diagonal census equals the recurrences") {
  const std::pair<std::uint32_t, std::uint32_t> ranges[] = {{2, 7}, {3, 4}};
  for (const auto& [k, n_max] : ranges) {
    CountCache cache(k);
    for (std::uint32_t n = 1; n <= n_max; ++n) {
      const PairCensus c = enumerate_pair_census(k, n, n);
      CHECK(c.mutually_bordered == cache.mutually_bordered(n));
      CHECK(c.right_bordered == cache.right_bordered(n));
      CHECK(c.mutually_unbordered == cache.mutually_unbordered(n));
    }
  }
}

TEST_CASE("threaded enumeration is schedule independent") {
  EnumerationOptions serial;
  EnumerationOptions threaded;
  threaded.threads = 5;
  const PairCensus a = enumerate_pair_census(3, 5, 4, serial);
  const PairCensus b = enumerate_pair_census(3, 5, 4, threaded);
  CHECK(a.mutually_bordered == b.mutually_bordered);
  CHECK(a.right_bordered == b.right_bordered);
  CHECK(a.left_bordered == b.left_bordered);
  CHECK(a.mutually_unbordered == b.mutually_unbordered);
  CHECK(census_by_lso(2, 7, serial) == census_by_lso(2, 7, threaded));
  CHECK(max_overlap_sum(2, 7, serial) == max_overlap_sum(2, 7, threaded));
  const auto ra = verify_decomposition(2, 6, serial);
  const auto rb = verify_decomposition(2, 6, threaded);
  CHECK(ra.checked == rb.checked);
  CHECK(ra.max_overlap_sum == rb.max_overlap_sum);
}

TEST_CASE("budget guard refuses instead of truncating") {
  EnumerationOptions tight;
  tight.pair_budget = 1000;
  CHECK_THROWS_AS(enumerate_pair_census(2, 5, 5, tight), BudgetExceeded);
  CHECK_NOTHROW(enumerate_pair_census(2, 4, 5, tight));  // 512 pairs
  CHECK_THROWS_AS(enumerate_pair_census(2, 30, 30), BudgetExceeded);
  try {
    enumerate_pair_census(2, 30, 30);
  } catch (const BudgetExceeded& e) {
    CHECK(e.pair_count() == "1152921504606846976");
  }
  CHECK_THROWS_AS(verify_decomposition(2, 20, tight), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_pair_census(2, 0, 3), InvalidInput);
}

TEST_CASE("verify_shortest_unbordered") {
  const auto r5 = verify_shortest_unbordered(2, 5);
  CHECK(r5.ok());
  CHECK(r5.checked == 1024);
  const auto r1 = verify_shortest_unbordered(2, 1);
  CHECK(r1.checked == 4);
  CHECK(r1.ok());
  CHECK(verify_shortest_unbordered(3, 3).ok());
}

TEST_CASE("verify_decomposition") {
  CHECK(verify_decomposition(2, 6).ok());
  CHECK(verify_decomposition(2, 2).ok());
  CHECK(verify_decomposition(2, 2).max_overlap_sum == 2);
  const auto r9 = verify_decomposition(2, 9);
  CHECK(r9.ok());
  CHECK(r9.checked == (1u << 18));
  CHECK(r9.max_overlap_sum == 12);
  CHECK(verify_decomposition(3, 4).ok());
}

TEST_CASE("max_overlap_sum") {
  CHECK(max_overlap_sum(2, 3) == 4);
  CHECK(max_overlap_sum(2, 4) == 5);
  CHECK(max_overlap_sum(2, 1) == 0);
  for (std::uint32_t n = 1; n <= 8; ++n) CHECK(max_overlap_sum(2, n) == (n >= 3 ? 4 * n / 3 : n == 2 ? 2 : 0));
}

TEST_CASE("extremal_pair") {
  CHECK(extremal_pair(3) == std::pair{bin("010"), bin("101")});
  CHECK(extremal_pair(4) == std::pair{bin("0110"), bin("1101")});
  CHECK(extremal_pair(5) == std::pair{bin("01110"), bin("11101")});
  CHECK_THROWS_AS(extremal_pair(2), InvalidInput);
  for (std::uint32_t n = 3; n <= 60; ++n) {
    const auto [u, v] = extremal_pair(n);
    REQUIRE(u.size() == n);
    const auto p = overlap_profile(u, v);
    CHECK(p.lso_uv + p.lso_vu == 4 * n / 3);
  }
}

TEST_CASE("census_by_lso") {
  CHECK(census_by_lso(2, 2) == std::map<std::size_t, BigCount>{{0, 8}, {1, 8}});
  CHECK(census_by_lso(2, 3) == std::map<std::size_t, BigCount>{{0, 24}, {1, 32}, {2, 8}});
  CHECK(census_by_lso(2, 1) == std::map<std::size_t, BigCount>{{0, 4}});

  const std::pair<std::uint32_t, std::uint32_t> ranges[] = {{2, 7}, {3, 4}};
  for (const auto& [k, n_max] : ranges) {
    CountCache cache(k);
    for (std::uint32_t n = 2; n <= n_max; ++n) {
      const auto hist = census_by_lso(k, n);
      BigCount overlapping = 0;
      for (std::uint32_t i = 1; i < n; ++i) {
        CHECK(hist.at(i) == cache.s(i, n));
        overlapping += cache.s(i, n);
      }
      CHECK(hist.at(0) == power(k, 2 * n) - overlapping);
    }
  }
}
