#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dioph {

// Precondition or input violation. The CLI maps it to exit code 1.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The operation is defined only for a subset of function variants.
class UnsupportedVariant : public UsageError {
 public:
  using UsageError::UsageError;
};

// A big integer would outgrow the configured bit budget.
class SizeCapExceeded : public UsageError {
 public:
  using UsageError::UsageError;
};

// A theorem-backed postcondition failed. The CLI maps it to exit code 2.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Upper bound on the bit length of integers produced by factorial or
// doubly exponential growth.
struct SizeCap {
  std::uint64_t bits = std::uint64_t{1} << 20;
};

}  // namespace dioph
