#include "overlap_lab/word.hpp"

#include <algorithm>
#include <string>

namespace overlap_lab {

namespace {

void require_pair(const Word& u, const Word& v) {
  if (u.empty() || v.empty())
    throw InvalidInput("pair operations require non-empty words");
  if (u.alphabet() != v.alphabet())
    throw InvalidInput("words are over different alphabets");
}

// Walks the failure chain starting at `length`, collecting every border
// length strictly below `limit`. Output is ascending.
std::vector<std::size_t> collect_chain(const std::vector<std::size_t>& pi,
                                       std::size_t length, std::size_t limit) {
  std::vector<std::size_t> out;
  while (length > 0) {
    if (length < limit) out.push_back(length);
    length = pi[length - 1];
  }
  std::reverse(out.begin(), out.end());
  return out;
}

// Failure function of v # u where # is the symbol k, outside the alphabet.
std::vector<std::size_t> joined_prefix_function(const Word& u, const Word& v) {
  std::vector<Symbol> joined;
  joined.reserve(u.size() + v.size() + 1);
  joined.insert(joined.end(), v.symbols().begin(), v.symbols().end());
  joined.push_back(static_cast<Symbol>(u.alphabet().size()));
  joined.insert(joined.end(), u.symbols().begin(), u.symbols().end());
  return prefix_function(joined);
}

}  // namespace

Word::Word(std::vector<Symbol> symbols, Alphabet alphabet)
    : symbols_(std::move(symbols)), alphabet_(alphabet) {
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (!alphabet_.contains(symbols_[i]))
      throw InvalidInput("symbol " + std::to_string(symbols_[i]) +
                         " at position " + std::to_string(i + 1) +
                         " is outside an alphabet of size " +
                         std::to_string(alphabet_.size()));
  }
}

Word Word::from_digits(std::string_view digits, Alphabet alphabet) {
  std::vector<Symbol> symbols;
  symbols.reserve(digits.size());
  for (std::size_t i = 0; i < digits.size(); ++i) {
    const char c = digits[i];
    if (c < '0' || c > '9')
      throw InvalidInput(std::string("character '") + c + "' at position " +
                         std::to_string(i + 1) + " is not a digit");
    symbols.push_back(static_cast<Symbol>(c - '0'));
  }
  return Word(std::move(symbols), alphabet);
}

Word Word::from_letters(std::string_view letters) {
  std::vector<Symbol> symbols;
  symbols.reserve(letters.size());
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const char c = letters[i];
    if (c < 'a' || c > 'z')
      throw InvalidInput(std::string("character '") + c + "' at position " +
                         std::to_string(i + 1) + " is not a lowercase letter");
    symbols.push_back(static_cast<Symbol>(c - 'a'));
  }
  return Word(std::move(symbols), Alphabet(26));
}

Word Word::prefix(std::size_t length) const {
  if (length > size()) throw InvalidInput("prefix longer than word");
  return Word(std::vector<Symbol>(symbols_.begin(), symbols_.begin() + length),
              alphabet_);
}

Word Word::suffix(std::size_t length) const {
  if (length > size()) throw InvalidInput("suffix longer than word");
  return Word(std::vector<Symbol>(symbols_.end() - length, symbols_.end()),
              alphabet_);
}

Word operator+(const Word& lhs, const Word& rhs) {
  if (lhs.alphabet() != rhs.alphabet())
    throw InvalidInput("words are over different alphabets");
  std::vector<Symbol> joined(lhs.symbols().begin(), lhs.symbols().end());
  joined.insert(joined.end(), rhs.symbols().begin(), rhs.symbols().end());
  return Word(std::move(joined), lhs.alphabet());
}

std::string_view to_string(PairClass c) noexcept {
  switch (c) {
    case PairClass::MutuallyBordered: return "MutuallyBordered";
    case PairClass::RightBordered: return "RightBordered";
    case PairClass::LeftBordered: return "LeftBordered";
    case PairClass::MutuallyUnbordered: return "MutuallyUnbordered";
  }
  return "?";
}

std::vector<std::size_t> prefix_function(std::span<const Symbol> s) {
  std::vector<std::size_t> pi(s.size(), 0);
  for (std::size_t i = 1; i < s.size(); ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && s[i] != s[k]) k = pi[k - 1];
    if (s[i] == s[k]) ++k;
    pi[i] = k;
  }
  return pi;
}

std::vector<std::size_t> border_lengths(const Word& w) {
  if (w.empty()) throw InvalidInput("border_lengths requires a non-empty word");
  const auto pi = prefix_function(w.symbols());
  return collect_chain(pi, pi.back(), w.size());
}

bool is_unbordered(const Word& w) {
  if (w.empty()) throw InvalidInput("is_unbordered requires a non-empty word");
  return prefix_function(w.symbols()).back() == 0;
}

std::vector<std::size_t> right_border_lengths(const Word& u, const Word& v) {
  require_pair(u, v);
  const auto pi = joined_prefix_function(u, v);
  return collect_chain(pi, pi.back(), std::min(u.size(), v.size()));
}

std::size_t shortest_right_border_length(const Word& u, const Word& v) {
  const auto lengths = right_border_lengths(u, v);
  return lengths.empty() ? 0 : lengths.front();
}

std::optional<Word> shortest_right_border(const Word& u, const Word& v) {
  const std::size_t l = shortest_right_border_length(u, v);
  if (l == 0) return std::nullopt;
  return u.suffix(l);
}

PairClass classify(const Word& u, const Word& v) {
  const bool right = shortest_right_border_length(u, v) > 0;
  const bool left = shortest_right_border_length(v, u) > 0;
  if (right && left) return PairClass::MutuallyBordered;
  if (right) return PairClass::RightBordered;
  if (left) return PairClass::LeftBordered;
  return PairClass::MutuallyUnbordered;
}

OverlapProfile overlap_profile(const Word& u, const Word& v) {
  OverlapProfile p;
  p.right_border_lengths = right_border_lengths(u, v);
  p.left_border_lengths = right_border_lengths(v, u);
  if (!p.right_border_lengths.empty()) {
    p.lso_uv = p.right_border_lengths.front();
    p.so_uv = u.suffix(p.lso_uv);
  }
  if (!p.left_border_lengths.empty()) {
    p.lso_vu = p.left_border_lengths.front();
    p.so_vu = v.suffix(p.lso_vu);
  }
  const bool right = p.lso_uv > 0;
  const bool left = p.lso_vu > 0;
  p.pair_class = right && left ? PairClass::MutuallyBordered
                 : right       ? PairClass::RightBordered
                 : left        ? PairClass::LeftBordered
                               : PairClass::MutuallyUnbordered;
  return p;
}

}  // namespace overlap_lab
