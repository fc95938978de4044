#pragma once

#include <stdexcept>
#include <string>

namespace overlap_lab {

/// Thrown when an argument violates an operation's precondition.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown by the exhaustive enumerators when the requested number of
/// ordered pairs exceeds the configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::string pair_count, std::string budget)
      : std::runtime_error("enumeration of " + pair_count +
                           " pairs exceeds budget of " + budget + " pairs"),
        pair_count_(std::move(pair_count)),
        budget_(std::move(budget)) {}

  const std::string& pair_count() const noexcept { return pair_count_; }
  const std::string& budget() const noexcept { return budget_; }

 private:
  std::string pair_count_;
  std::string budget_;
};

}  // namespace overlap_lab
