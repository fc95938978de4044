#include "overlap_lab/asymptotics.hpp"

#include <algorithm>

#include "overlap_lab/counting.hpp"
#include "overlap_lab/errors.hpp"

namespace overlap_lab {

namespace {

void require_inputs(std::uint32_t k, std::uint32_t terms) {
  if (k < 2) throw InvalidInput("limits require k >= 2");
  if (terms < 1) throw InvalidInput("limits require at least one term");
}

// sum_{i=1}^{terms} weight(i) u_i k^{-2i} over the common denominator k^{2 terms}.
template <typename Weight>
ExactRational weighted_partial_sum(std::uint32_t k, std::uint32_t terms, Weight weight) {
  CountCache cache(k);
  BigCount numerator = 0;
  for (std::uint32_t i = 1; i <= terms; ++i)
    numerator += weight(i) * cache.unbordered(i) * power(k, 2ull * (terms - i));
  return ExactRational(numerator, power(k, 2ull * terms));
}

// Exact range of f over [a, b] for a function that is monotone on each side
// of `turn` with extreme value f(turn) there.
template <typename F>
RatInterval image_around_turn(const RatInterval& x, const ExactRational& turn, F f) {
  const ExactRational fa = f(x.lo);
  const ExactRational fb = f(x.hi);
  if (x.hi <= turn || x.lo >= turn) return {std::min(fa, fb), std::max(fa, fb)};
  const ExactRational ft = f(turn);
  return {std::min({fa, fb, ft}), std::max({fa, fb, ft})};
}

}  // namespace

std::string_view to_string(LimitQuantity q) noexcept {
  switch (q) {
    case LimitQuantity::MLimit: return "M_limit";
    case LimitQuantity::RLimit: return "R_limit";
    case LimitQuantity::ULimit: return "U_limit";
    case LimitQuantity::ExpectedLso: return "expected_lso";
    case LimitQuantity::UnborderedDensity: return "unbordered_density";
  }
  return "?";
}

RatInterval series_bracket(std::uint32_t k, std::uint32_t terms) {
  require_inputs(k, terms);
  const ExactRational partial = weighted_partial_sum(k, terms, [](std::uint32_t) { return 1; });
  const ExactRational tail(BigCount(1), power(k, terms) * (k - 1));
  return {partial, partial + tail};
}

RatInterval limit_M(std::uint32_t k, std::uint32_t terms) {
  const RatInterval t = series_bracket(k, terms);
  return {t.lo * t.lo, t.hi * t.hi};
}

RatInterval limit_R(std::uint32_t k, std::uint32_t terms) {
  const RatInterval t = series_bracket(k, terms);
  return image_around_turn(t, ExactRational(1, 2), [](const ExactRational& x) -> ExactRational { return x - x * x; });
}

RatInterval limit_U(std::uint32_t k, std::uint32_t terms) {
  const RatInterval t = series_bracket(k, terms);
  return image_around_turn(t, ExactRational(1), [](const ExactRational& x) -> ExactRational {
    const ExactRational d = 1 - x;
    return d * d;
  });
}

RatInterval expected_lso_limit(std::uint32_t k, std::uint32_t terms) {
  require_inputs(k, terms);
  const ExactRational partial = weighted_partial_sum(k, terms, [](std::uint32_t i) { return i; });
  const BigCount km1 = k - 1;
  const ExactRational tail(BigCount(std::uint64_t{k} * (terms + 1) - terms),
                           power(k, terms) * km1 * km1);
  return {partial, partial + tail};
}

ExactRational unbordered_density(std::uint32_t k, std::uint32_t n) {
  require_inputs(k, n);
  return ExactRational(unbordered_count(k, n), power(k, n));
}

LimitReport limit_report(LimitQuantity quantity, std::uint32_t k, std::uint32_t terms,
                         unsigned precision) {
  LimitReport report;
  report.k = k;
  report.terms = terms;
  report.quantity = quantity;
  report.precision = precision;
  switch (quantity) {
    case LimitQuantity::MLimit: report.interval = limit_M(k, terms); break;
    case LimitQuantity::RLimit: report.interval = limit_R(k, terms); break;
    case LimitQuantity::ULimit: report.interval = limit_U(k, terms); break;
    case LimitQuantity::ExpectedLso: report.interval = expected_lso_limit(k, terms); break;
    case LimitQuantity::UnborderedDensity: {
      const ExactRational value = unbordered_density(k, terms);
      report.interval = {value, value};
      break;
    }
  }
  const ExactRational half_ulp(BigCount(1), 2 * power(10, precision));
  report.certified = report.interval.width() < half_ulp;
  report.decimal = to_decimal(report.interval.midpoint(), precision);
  return report;
}

}  // namespace overlap_lab
