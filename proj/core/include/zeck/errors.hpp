#pragma once

#include <stdexcept>
#include <string>

namespace zeck {

/// Enumeration was asked to brute-force an interval wider than its budget.
/// Callers are expected to fall back to the recurrence instead.
class budget_error : public std::runtime_error {
 public:
  explicit budget_error(const std::string& what) : std::runtime_error(what) {}
};

/// A recurrence step produced a negative count. The evolution hypotheses
/// guarantee non-negativity, so this always indicates bad seeds or a bad
/// coefficient table and is a hard failure.
class negative_entry_error : public std::runtime_error {
 public:
  explicit negative_entry_error(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace zeck
