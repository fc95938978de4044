#include "overlap_lab/counting.hpp"

#include "overlap_lab/errors.hpp"

namespace overlap_lab {

namespace {

void require_alphabet(std::uint32_t k) {
  if (k < 1) throw InvalidInput("alphabet size k must be at least 1");
}

void require_length(std::uint32_t n) {
  if (n < 1) throw InvalidInput("word length n must be at least 1");
}

}  // namespace

CountCache::CountCache(std::uint32_t k) : k_(k) {
  require_alphabet(k);
  k_powers_.push_back(1);
  u_.push_back(1);
}

BigCount CountCache::k_power(std::uint32_t e) {
  while (k_powers_.size() <= e) k_powers_.push_back(k_powers_.back() * k_);
  return k_powers_[e];
}

void CountCache::fill_unbordered(std::uint32_t n) {
  while (u_.size() <= n) {
    const std::size_t m = u_.size();
    BigCount next = u_[m - 1] * k_;
    if (m % 2 == 0) next -= u_[m / 2];
    u_.push_back(std::move(next));
  }
}

BigCount CountCache::unbordered(std::uint32_t n) {
  fill_unbordered(n);
  return u_[n];
}

BigCount CountCache::bordered(std::uint32_t n) {
  require_length(n);
  fill_unbordered(n / 2);
  BigCount total = 0;
  for (std::uint32_t i = 1; i <= n / 2; ++i) total += u_[i] * k_power(n - 2 * i);
  return total;
}

const std::vector<BigCount>& CountCache::g_row(std::uint32_t t, std::uint32_t n) {
  auto& row = g_[t];
  // row[j] = G_t(j); entries below 2t are zero.
  while (row.size() <= n) {
    const auto j = static_cast<std::uint32_t>(row.size());
    if (j < 2 * t) {
      row.push_back(0);
      continue;
    }
    BigCount value = k_power(j - 2 * t);
    for (std::uint32_t i = 2 * t; i <= j / 2; ++i) value -= row[i] * k_power(j - 2 * i);
    row.push_back(std::move(value));
  }
  return row;
}

BigCount CountCache::g(std::uint32_t t, std::uint32_t n) {
  if (t < 1) throw InvalidInput("G_t(n) requires t >= 1");
  if (n < t) throw InvalidInput("G_t(n) requires n >= t");
  // A unary alphabet has no pair of distinct words to fix as prefix and suffix.
  if (k_ < 2) throw InvalidInput("G_t(n) requires k >= 2");
  return g_row(t, n)[n];
}

BigCount CountCache::mutually_bordered(std::uint32_t n) {
  require_length(n);
  if (auto it = m_.find(n); it != m_.end()) return it->second;

  fill_unbordered(n);
  // Pairs whose two shortest overlaps fit side by side (i + j <= n).
  BigCount small = 0;
  for (std::uint32_t i = 1; i + 1 <= n; ++i)
    for (std::uint32_t j = 1; j <= n - i; ++j)
      small += u_[i] * u_[j] * k_power(2 * n - 2 * (i + j));

  // Pairs of the form (xsytx, ytxsy) with |x| = |y| = i.
  BigCount large = 0;
  for (std::uint32_t i = 1; i <= n / 3; ++i) {
    const BigCount distinct_pairs = mutually_unbordered(i) - u_[i];
    const auto& row = g_row(i, n);
    BigCount inner = 0;
    for (std::uint32_t j = 2 * i; j <= n - i; ++j) inner += row[j] * row[n - j + i];
    large += distinct_pairs * inner;
  }

  return m_.emplace(n, small + large).first->second;
}

BigCount CountCache::right_bordered(std::uint32_t n) {
  require_length(n);
  if (auto it = r_.find(n); it != r_.end()) return it->second;
  fill_unbordered(n);
  BigCount has_right = 0;
  for (std::uint32_t i = 1; i < n; ++i) has_right += k_power(2 * n - 2 * i) * u_[i];
  return r_.emplace(n, has_right - mutually_bordered(n)).first->second;
}

BigCount CountCache::mutually_unbordered(std::uint32_t n) {
  require_length(n);
  if (auto it = pair_u_.find(n); it != pair_u_.end()) return it->second;
  BigCount value = k_power(2 * n) - 2 * right_bordered(n) - mutually_bordered(n);
  return pair_u_.emplace(n, std::move(value)).first->second;
}

BigCount CountCache::s(std::uint32_t i, std::uint32_t n) {
  require_length(n);
  if (i < 1 || i >= n)
    throw InvalidInput("S_k(i, n) requires 1 <= i <= n - 1 (got i = " +
                       std::to_string(i) + ", n = " + std::to_string(n) + ")");
  return unbordered(i) * k_power(2 * (n - i));
}

ExactRational CountCache::expected_lso(std::uint32_t n) {
  require_length(n);
  BigCount weighted = 0;
  for (std::uint32_t i = 1; i < n; ++i) weighted += s(i, n) * i;
  return ExactRational(weighted, k_power(2 * n));
}

BigCount unbordered_count(std::uint32_t k, std::uint32_t n) {
  return CountCache(k).unbordered(n);
}

BigCount bordered_count(std::uint32_t k, std::uint32_t n) {
  return CountCache(k).bordered(n);
}

BigCount g_count(std::uint32_t k, std::uint32_t t, std::uint32_t n) {
  return CountCache(k).g(t, n);
}

BigCount mutually_bordered_count(std::uint32_t k, std::uint32_t n) {
  return CountCache(k).mutually_bordered(n);
}

BigCount right_bordered_count(std::uint32_t k, std::uint32_t n) {
  return CountCache(k).right_bordered(n);
}

BigCount mutually_unbordered_count(std::uint32_t k, std::uint32_t n) {
  return CountCache(k).mutually_unbordered(n);
}

BigCount s_count(std::uint32_t k, std::uint32_t i, std::uint32_t n) {
  return CountCache(k).s(i, n);
}

ExactRational expected_lso_finite(std::uint32_t k, std::uint32_t n) {
  return CountCache(k).expected_lso(n);
}

}  // namespace overlap_lab
