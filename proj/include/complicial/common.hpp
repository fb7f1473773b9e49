#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace complicial {

using Id = std::int32_t;
inline constexpr Id kNone = -1;

// Malformed or inconsistent user input.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A composable string of 1-generators, in path order (first letter applied
// first). The empty word is the identity at src == tgt.
struct Word {
  Id src = kNone;
  Id tgt = kNone;
  std::vector<Id> letters;
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

struct ValidationReport {
  static constexpr std::size_t kMaxViolations = 200;

  std::vector<std::string> violations;
  std::size_t suppressed = 0;

  bool valid() const { return violations.empty(); }
  void add(std::string message) {
    if (violations.size() < kMaxViolations)
      violations.push_back(std::move(message));
    else
      ++suppressed;
  }
  std::string summary() const;
};

}  // namespace complicial
