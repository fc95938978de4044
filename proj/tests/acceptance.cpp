// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "overlap_lab/asymptotics.hpp"
#include "overlap_lab/cli.hpp"
#include "overlap_lab/counting.hpp"
#include "overlap_lab/oracle.hpp"
#include "published_tables.hpp"

using namespace overlap_lab;
using namespace overlap_lab::testing;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

BigCount json_count(const json& j) {
  return j.is_string() ? BigCount(j.get<std::string>()) : BigCount(j.get<std::uint64_t>());
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// 1. Binary M/R/U table through the CLI, zero tolerance, under one second.
Outcome table4() {
  Outcome o;
  const auto start = Clock::now();
  std::ostringstream out, err;
  const std::vector<std::string> args = {"count", "--k", "2", "--n", "15", "--format", "json"};
  const int code = cli::run(args, out, err);
  const double elapsed = seconds_since(start);
  if (code != 0) {
    o.fail("count exited with " + std::to_string(code));
    return o;
  }
  const json doc = json::parse(out.str());
  int matched = 0;
  for (const auto& row : kDiagonal2) {
    const json& r = doc["rows"][row[0] - 1];
    const char* keys[] = {"M", "R", "U"};
    for (int q = 0; q < 3; ++q) {
      if (json_count(r[keys[q]]) == row[q + 1]) ++matched;
      else o.fail(std::string(keys[q]) + "_2(" + std::to_string(row[0]) + ") mismatch");
    }
  }
  if (elapsed >= 1.0) o.fail("took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = std::to_string(matched) + "/45 values, " + std::to_string(elapsed) + " s";
  return o;
}

// 2. Tables 1-3 by exhaustive single-threaded census, under 30 s.
Outcome tables123() {
  Outcome o;
  EnumerationOptions options;
  options.threads = 1;
  const auto start = Clock::now();
  int matched = 0;
  for (std::uint32_t m = 1; m <= 8; ++m)
    for (std::uint32_t n = 1; n <= 8; ++n) {
      const PairCensus c = enumerate_pair_census(2, m, n, options);
      const std::string cell = "(" + std::to_string(m) + "," + std::to_string(n) + ")";
      if (c.mutually_bordered == kMutuallyBordered2[m - 1][n - 1]) ++matched; else o.fail("M" + cell);
      if (c.right_bordered == kRightBordered2[m - 1][n - 1]) ++matched; else o.fail("R" + cell);
      if (c.mutually_unbordered == kMutuallyUnbordered2[m - 1][n - 1]) ++matched; else o.fail("U" + cell);
    }
  const double elapsed = seconds_since(start);
  if (elapsed >= 30.0) o.fail("took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = std::to_string(matched) + "/192 entries, " + std::to_string(elapsed) + " s";
  return o;
}

// 3. Recurrences against exhaustive enumeration.
Outcome recurrence_vs_oracle() {
  Outcome o;
  const std::pair<std::uint32_t, std::uint32_t> ranges[] = {{2, 7}, {3, 4}};
  int cases = 0;
  for (const auto& [k, n_max] : ranges) {
    CountCache cache(k);
    for (std::uint32_t n = 1; n <= n_max; ++n) {
      const std::string at = "k=" + std::to_string(k) + " n=" + std::to_string(n);
      const PairCensus c = enumerate_pair_census(k, n, n);
      if (c.mutually_bordered != cache.mutually_bordered(n)) o.fail("M " + at);
      if (c.right_bordered != cache.right_bordered(n)) o.fail("R " + at);
      if (c.mutually_unbordered != cache.mutually_unbordered(n)) o.fail("U " + at);
      const auto hist = census_by_lso(k, n);
      for (std::uint32_t i = 1; i < n; ++i)
        if (hist.at(i) != cache.s(i, n)) o.fail("S(" + std::to_string(i) + ") " + at);
      ++cases;
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " diagonals";
  return o;
}

// 4, 5. Certified limits within 0.001 of the published values.
Outcome published_limits(bool expected_value) {
  Outcome o;
  const double tolerance = 0.001;
  const std::uint32_t terms = 60;
  const auto start = Clock::now();
  int matched = 0;
  for (const auto& row : kLimits) {
    auto check = [&](const char* name, const RatInterval& iv, double published) {
      const double mid = iv.midpoint().convert_to<double>();
      // The bracket must be far tighter than the comparison tolerance.
      const bool tight = iv.width() < ExactRational(1, 1000000);
      if (std::abs(mid - published) <= tolerance && tight) ++matched;
      else o.fail(std::string(name) + " k=" + std::to_string(row.k) + " got " + std::to_string(mid));
    };
    if (expected_value) {
      check("E[lso]", expected_lso_limit(row.k, terms), row.expected_lso);
    } else {
      check("M", limit_M(row.k, terms), row.m);
      check("R", limit_R(row.k, terms), row.r);
      check("U", limit_U(row.k, terms), row.u);
    }
  }
  const double elapsed = seconds_since(start);
  if (!expected_value && elapsed >= 1.0) o.fail("took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = std::to_string(matched) + (expected_value ? "/6" : "/18") + " values, " +
                         std::to_string(elapsed) + " s";
  return o;
}

// 6. u_40 / 2^40 against Nielsen's constant.
Outcome density() {
  Outcome o;
  const double value = unbordered_density(2, 40).convert_to<double>();
  if (std::abs(value - kNielsenBinaryConstant) >= 1e-4) o.fail("got " + std::to_string(value));
  else o.detail = "u_40/2^40 = " + std::to_string(value);
  return o;
}

// 7. Overlap-sum bound, exhaustive for n <= 10 and attained by extremal pairs.
Outcome four_thirds() {
  Outcome o;
  const auto start = Clock::now();
  for (std::uint32_t n = 1; n <= 10; ++n) {
    const std::size_t best = max_overlap_sum(2, n);
    if (best > 4 * n / 3) o.fail("n=" + std::to_string(n) + " max " + std::to_string(best));
  }
  const double elapsed = seconds_since(start);
  for (std::uint32_t n = 3; n <= 60; ++n) {
    const auto [u, v] = extremal_pair(n);
    const auto p = overlap_profile(u, v);
    if (p.lso_uv + p.lso_vu != 4 * n / 3) o.fail("extremal_pair(" + std::to_string(n) + ") misses the bound");
  }
  if (elapsed >= 60.0) o.fail("took " + std::to_string(elapsed) + " s");
  if (o.pass) o.detail = "n<=10 exhaustive in " + std::to_string(elapsed) + " s, equality for 3<=n<=60";
  return o;
}

// 8. Structural lemmas with zero violations.
Outcome lemmas() {
  Outcome o;
  const std::pair<std::uint32_t, std::uint32_t> ranges[] = {{2, 8}, {3, 4}};
  std::uint64_t checked = 0;
  for (const auto& [k, n_max] : ranges)
    for (std::uint32_t n = 1; n <= n_max; ++n) {
      const std::string at = " k=" + std::to_string(k) + " n=" + std::to_string(n);
      const auto a = verify_shortest_unbordered(k, n);
      const auto b = verify_decomposition(k, n);
      checked += a.checked + b.checked;
      if (!a.ok()) o.fail("shortest-unbordered" + at + ": " + a.violations.front().reason);
      if (!b.ok()) o.fail("decomposition" + at + ": " + b.violations.front().reason);
    }
  if (o.pass) o.detail = std::to_string(checked) + " pair checks, 0 violations";
  return o;
}

// 9. Exact identities.
Outcome identities() {
  Outcome o;
  for (std::uint32_t k = 1; k <= 4; ++k) {
    CountCache cache(k);
    for (std::uint32_t n = 1; n <= 20; ++n)
      if (cache.mutually_unbordered(n) + 2 * cache.right_bordered(n) + cache.mutually_bordered(n) != power(k, 2 * n))
        o.fail("U+2R+M k=" + std::to_string(k) + " n=" + std::to_string(n));
    for (std::uint32_t n = 1; n <= 40; ++n)
      if (cache.bordered(n) != power(k, n) - cache.unbordered(n))
        o.fail("bordered k=" + std::to_string(k) + " n=" + std::to_string(n));
  }
  if (o.pass) o.detail = "k<=4: 80 partition identities, 160 bordered-count identities";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"AC1 M/R/U binary table, n <= 15", table4},
      {"AC2 rectangular census tables, m, n <= 8", tables123},
      {"AC3 recurrences equal exhaustive census", recurrence_vs_oracle},
      {"AC4 limiting densities within 0.001", [] { return published_limits(false); }},
      {"AC5 expected shortest overlap within 0.001", [] { return published_limits(true); }},
      {"AC6 unbordered density near 0.267786", density},
      {"AC7 overlap sum <= floor(4n/3), attained", four_thirds},
      {"AC8 structural lemmas, zero violations", lemmas},
      {"AC9 exact identities", identities},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("[%s] %s: %s\n", o.pass ? "PASS" : "FAIL", c.name, o.detail.c_str());
    if (!o.pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
  return failures == 0 ? 0 : 1;
}
