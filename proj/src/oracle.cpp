#include "overlap_lab/oracle.hpp"

#include <algorithm>
#include <thread>

#include "overlap_lab/errors.hpp"

namespace overlap_lab {

namespace {

void require_length(std::uint32_t n) {
  if (n < 1) throw InvalidInput("word length must be at least 1");
}

// Symbols of the index-th length-n word in lexicographic order.
std::vector<Symbol> decode(std::uint64_t index, std::uint32_t k, std::uint32_t n) {
  std::vector<Symbol> symbols(n);
  for (std::uint32_t i = n; i-- > 0;) {
    symbols[i] = static_cast<Symbol>(index % k);
    index /= k;
  }
  return symbols;
}

// Base-k increment; returns false after wrapping past the last word.
bool advance(std::vector<Symbol>& symbols, std::uint32_t k) {
  for (std::size_t i = symbols.size(); i-- > 0;) {
    if (++symbols[i] < k) return true;
    symbols[i] = 0;
  }
  return false;
}

unsigned worker_count(const EnumerationOptions& options) {
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return threads;
}

// Visits every ordered pair (u, v) with |u| = m, |v| = n. The u-range is cut
// into contiguous chunks, one accumulator per chunk; accumulators come back
// in enumeration order so callers can merge deterministically.
template <typename Acc, typename Visit>
std::vector<Acc> for_each_pair(std::uint32_t k, std::uint32_t m, std::uint32_t n,
                               const EnumerationOptions& options, Visit visit) {
  require_length(m);
  require_length(n);
  check_budget(k, m, n, options);

  const Alphabet alphabet(k);
  // Fits: k^m * k^n is within a 64-bit budget.
  std::uint64_t u_total = 1;
  for (std::uint32_t i = 0; i < m; ++i) u_total *= k;

  const std::uint64_t chunks = std::min<std::uint64_t>(worker_count(options), u_total);
  std::vector<Acc> results(chunks);

  auto run_chunk = [&](std::uint64_t chunk) {
    const std::uint64_t begin = u_total * chunk / chunks;
    const std::uint64_t end = u_total * (chunk + 1) / chunks;
    Acc& acc = results[chunk];
    for (std::uint64_t ui = begin; ui < end; ++ui) {
      const Word u(decode(ui, k, m), alphabet);
      std::vector<Symbol> v_symbols(n, 0);
      do {
        visit(acc, u, Word(v_symbols, alphabet));
      } while (advance(v_symbols, k));
    }
  };

  if (chunks == 1) {
    run_chunk(0);
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(chunks);
    for (std::uint64_t c = 0; c < chunks; ++c) workers.emplace_back(run_chunk, c);
  }
  return results;
}

struct ReportAcc {
  std::uint64_t checked = 0;
  std::vector<Violation> violations;
  std::size_t max_overlap_sum = 0;
};

ViolationReport merge_reports(std::vector<ReportAcc> parts, std::size_t cap) {
  ViolationReport report;
  for (auto& part : parts) {
    report.checked += part.checked;
    report.max_overlap_sum = std::max(report.max_overlap_sum, part.max_overlap_sum);
    for (auto& v : part.violations) {
      if (report.violations.size() >= cap) break;
      report.violations.push_back(std::move(v));
    }
  }
  return report;
}

Word slice(const Word& w, std::size_t pos, std::size_t len) {
  return w.suffix(w.size() - pos).prefix(len);
}

// Empty string when (u, v) satisfies the factorization, else the reason.
std::string decomposition_failure(const Word& u, const Word& v, const OverlapProfile& p) {
  const std::size_t n = u.size();
  const std::size_t i = p.lso_uv;
  const std::size_t j = p.lso_vu;
  const Word& y = *p.so_uv;  // suffix of u, prefix of v
  const Word& x = *p.so_vu;  // suffix of v, prefix of u

  if (!is_unbordered(x)) return "so(v,u) is bordered";
  if (!is_unbordered(y)) return "so(u,v) is bordered";

  if (i + j <= n) {
    if (u.prefix(j) != x || u.suffix(i) != y) return "u is not of the form x s y";
    if (v.prefix(i) != y || v.suffix(j) != x) return "v is not of the form y t x";
    return {};
  }

  if (3 * (i + j) > 4 * n) return "lso(u,v) + lso(v,u) exceeds 4n/3";
  const std::size_t p_len = i + j - n;
  if (i < 2 * p_len || j < 2 * p_len) return "shortest overlaps too short for x s y t x";
  const std::size_t s_len = j - 2 * p_len;
  const std::size_t t_len = i - 2 * p_len;

  const Word xx = u.prefix(p_len);
  const Word s = slice(u, p_len, s_len);
  const Word yy = slice(u, p_len + s_len, p_len);
  const Word t = slice(u, 2 * p_len + s_len, t_len);

  if (xx + s + yy + t + xx != u) return "u is not of the form x s y t x";
  if (yy + t + xx + s + yy != v) return "v is not of the form y t x s y";
  if (xx == yy) return "x equals y";
  if (classify(xx, yy) != PairClass::MutuallyUnbordered) return "(x, y) is not mutually unbordered";

  const Word xsy = xx + s + yy;
  const Word ytx = yy + t + xx;
  if (!is_unbordered(xsy)) return "x s y is bordered";
  if (!is_unbordered(ytx)) return "y t x is bordered";
  if (ytx != y) return "so(u,v) differs from y t x";
  if (xsy != x) return "so(v,u) differs from x s y";
  return {};
}

}  // namespace

void check_budget(std::uint32_t k, std::uint32_t m, std::uint32_t n,
                  const EnumerationOptions& options) {
  const BigCount pairs = power(k, std::uint64_t{m} + n);
  if (pairs > options.pair_budget)
    throw BudgetExceeded(pairs.str(), std::to_string(options.pair_budget));
}

PairCensus enumerate_pair_census(std::uint32_t k, std::uint32_t m, std::uint32_t n,
                                 const EnumerationOptions& options) {
  struct Acc {
    std::uint64_t counts[4] = {0, 0, 0, 0};
  };
  const auto parts = for_each_pair<Acc>(k, m, n, options, [](Acc& acc, const Word& u, const Word& v) {
    ++acc.counts[static_cast<int>(classify(u, v))];
  });

  std::uint64_t totals[4] = {0, 0, 0, 0};
  for (const auto& part : parts)
    for (int c = 0; c < 4; ++c) totals[c] += part.counts[c];

  PairCensus census;
  census.k = k;
  census.m = m;
  census.n = n;
  census.mutually_bordered = totals[static_cast<int>(PairClass::MutuallyBordered)];
  census.right_bordered = totals[static_cast<int>(PairClass::RightBordered)];
  census.left_bordered = totals[static_cast<int>(PairClass::LeftBordered)];
  census.mutually_unbordered = totals[static_cast<int>(PairClass::MutuallyUnbordered)];
  return census;
}

ViolationReport verify_shortest_unbordered(std::uint32_t k, std::uint32_t n,
                                           const EnumerationOptions& options) {
  const std::size_t cap = options.max_violations;
  auto parts = for_each_pair<ReportAcc>(k, n, n, options, [cap](ReportAcc& acc, const Word& u, const Word& v) {
    ++acc.checked;
    const auto lengths = right_border_lengths(u, v);
    for (const std::size_t l : lengths) {
      const bool shortest = l == lengths.front();
      const bool unbordered = is_unbordered(u.suffix(l));
      if (shortest != unbordered && acc.violations.size() < cap) {
        acc.violations.push_back({u, v,
                                  "right-border of length " + std::to_string(l) +
                                      (shortest ? " is shortest but bordered"
                                                : " is not shortest but unbordered")});
      }
    }
  });
  return merge_reports(std::move(parts), cap);
}

ViolationReport verify_decomposition(std::uint32_t k, std::uint32_t n,
                                     const EnumerationOptions& options) {
  const std::size_t cap = options.max_violations;
  auto parts = for_each_pair<ReportAcc>(k, n, n, options, [cap](ReportAcc& acc, const Word& u, const Word& v) {
    ++acc.checked;
    const OverlapProfile p = overlap_profile(u, v);
    acc.max_overlap_sum = std::max(acc.max_overlap_sum, p.lso_uv + p.lso_vu);
    if (p.pair_class != PairClass::MutuallyBordered) return;
    std::string failure = decomposition_failure(u, v, p);
    if (!failure.empty() && acc.violations.size() < cap)
      acc.violations.push_back({u, v, std::move(failure)});
  });
  return merge_reports(std::move(parts), cap);
}

std::size_t max_overlap_sum(std::uint32_t k, std::uint32_t n, const EnumerationOptions& options) {
  struct Acc {
    std::size_t best = 0;
  };
  const auto parts = for_each_pair<Acc>(k, n, n, options, [](Acc& acc, const Word& u, const Word& v) {
    acc.best = std::max(acc.best, shortest_right_border_length(u, v) + shortest_right_border_length(v, u));
  });
  std::size_t best = 0;
  for (const auto& part : parts) best = std::max(best, part.best);
  return best;
}

std::pair<Word, Word> extremal_pair(std::uint32_t n) {
  if (n < 3) throw InvalidInput("extremal_pair requires n >= 3");
  const std::uint32_t m = n / 3;
  const std::uint32_t middle = m + n % 3;
  auto run = [](std::vector<Symbol>& out, Symbol s, std::uint32_t count) {
    out.insert(out.end(), count, s);
  };
  std::vector<Symbol> u;
  std::vector<Symbol> v;
  // (0^m 1^middle 0^m, 1^middle 0^m 1^m)
  run(u, 0, m);
  run(u, 1, middle);
  run(u, 0, m);
  run(v, 1, middle);
  run(v, 0, m);
  run(v, 1, m);
  const Alphabet binary(2);
  return {Word(std::move(u), binary), Word(std::move(v), binary)};
}

std::map<std::size_t, BigCount> census_by_lso(std::uint32_t k, std::uint32_t n,
                                               const EnumerationOptions& options) {
  using Acc = std::vector<std::uint64_t>;
  auto parts = for_each_pair<Acc>(k, n, n, options, [n](Acc& acc, const Word& u, const Word& v) {
    if (acc.empty()) acc.assign(n, 0);
    ++acc[shortest_right_border_length(u, v)];
  });
  std::map<std::size_t, BigCount> histogram;
  for (std::size_t i = 0; i < n; ++i) histogram[i] = 0;
  for (const auto& part : parts)
    for (std::size_t i = 0; i < part.size(); ++i) histogram[i] += part[i];
  return histogram;
}

}  // namespace overlap_lab
