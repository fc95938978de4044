#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "overlap_lab/errors.hpp"

namespace overlap_lab {

using Symbol = std::uint32_t;

/// The alphabet {0, 1, ..., k-1}.
class Alphabet {
 public:
  explicit Alphabet(std::uint32_t k) : k_(k) {
    if (k < 1) throw InvalidInput("alphabet size must be at least 1");
  }

  std::uint32_t size() const noexcept { return k_; }
  bool contains(Symbol s) const noexcept { return s < k_; }

  friend bool operator==(Alphabet, Alphabet) = default;

 private:
  std::uint32_t k_;
};

/// A finite word over an Alphabet. The empty word is a valid value, but
/// every pair operation below rejects it.
class Word {
 public:
  explicit Word(Alphabet alphabet) : alphabet_(alphabet) {}
  Word(std::vector<Symbol> symbols, Alphabet alphabet);

  /// Parses a compact digit string such as "1000101" (each character one
  /// symbol, '0'..'9'). Intended for tests and small alphabets.
  static Word from_digits(std::string_view digits, Alphabet alphabet);

  /// Maps 'a'..'z' to 0..25 over a 26-letter alphabet.
  static Word from_letters(std::string_view letters);

  std::span<const Symbol> symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Alphabet alphabet() const noexcept { return alphabet_; }
  Symbol operator[](std::size_t i) const { return symbols_[i]; }

  Word prefix(std::size_t length) const;
  Word suffix(std::size_t length) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
  Alphabet alphabet_;
};

/// Concatenation; both operands must share an alphabet.
Word operator+(const Word& lhs, const Word& rhs);

enum class PairClass {
  MutuallyBordered,
  RightBordered,
  LeftBordered,
  MutuallyUnbordered,
};

std::string_view to_string(PairClass c) noexcept;

struct OverlapProfile {
  std::vector<std::size_t> right_border_lengths;
  std::vector<std::size_t> left_border_lengths;
  std::optional<Word> so_uv;
  std::size_t lso_uv = 0;
  std::optional<Word> so_vu;
  std::size_t lso_vu = 0;
  PairClass pair_class = PairClass::MutuallyUnbordered;
};

/// Prefix (failure) function: result[i] is the length of the longest proper
/// border of s[0..i]. Symbols are compared as plain integers.
std::vector<std::size_t> prefix_function(std::span<const Symbol> s);

/// Lengths 1 <= l < |w| with prefix_l(w) == suffix_l(w), ascending.
std::vector<std::size_t> border_lengths(const Word& w);
bool is_unbordered(const Word& w);

/// Lengths l with l < |u|, l < |v| and suffix_l(u) == prefix_l(v), ascending.
/// Linear in |u| + |v|.
std::vector<std::size_t> right_border_lengths(const Word& u, const Word& v);

/// Length of the shortest right-border of (u, v), 0 if there is none.
std::size_t shortest_right_border_length(const Word& u, const Word& v);
std::optional<Word> shortest_right_border(const Word& u, const Word& v);

PairClass classify(const Word& u, const Word& v);
OverlapProfile overlap_profile(const Word& u, const Word& v);

}  // namespace overlap_lab
