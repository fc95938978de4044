#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>

#include "overlap_lab/word.hpp"

namespace overlap_lab::cli {

enum class OutputFormat { Plain, Csv, Json };

/// Process exit codes. Stable: scripts depend on them.
enum ExitCode : int {
  kSuccess = 0,
  kViolationFound = 1,
  kUsageError = 2,
  kBudgetExceeded = 3,
  kPrecisionShortfall = 4,
};

inline constexpr int kJsonSchemaVersion = 1;

/// Environment variable overriding the oracle's pair budget.
inline constexpr const char* kBudgetEnvVar = "OVERLAP_LAB_BUDGET";

/// Text form of a word: a digit string for k <= 10, comma-separated decimal
/// symbols for k > 10, or lowercase letters a-z (0-25) when `letters` is set.
/// Errors name the 1-based offending position.
Word parse_word(std::string_view text, Alphabet alphabet, bool letters = false);
std::string render_word(const Word& w, bool letters = false);

/// Runs one invocation; `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace overlap_lab::cli
