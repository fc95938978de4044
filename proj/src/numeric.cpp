#include "overlap_lab/numeric.hpp"

namespace overlap_lab {

BigCount power(std::uint64_t base, std::uint64_t exponent) {
  BigCount result = 1;
  BigCount b = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::string to_string(const ExactRational& q) {
  const BigCount num = numerator(q);
  const BigCount den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_decimal(const ExactRational& q, unsigned digits) {
  const bool negative = q < 0;
  const ExactRational magnitude = negative ? ExactRational(-q) : q;
  const BigCount scale = power(10, digits);
  // floor(|q| * 10^d + 1/2)
  const BigCount scaled_num = numerator(magnitude) * scale * 2 + denominator(magnitude);
  const BigCount scaled = scaled_num / (denominator(magnitude) * 2);

  std::string text = scaled.str();
  if (digits > 0) {
    if (text.size() <= digits) text.insert(0, digits + 1 - text.size(), '0');
    text.insert(text.size() - digits, ".");
  }
  if (negative && scaled != 0) text.insert(0, "-");
  return text;
}

}  // namespace overlap_lab
