#pragma once

#include <stdexcept>

namespace b3 {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SyntaxError : Error { using Error::Error; };
struct SearchBudgetExceeded : Error { using Error::Error; };
struct NotXuForm : Error { using Error::Error; };
struct NotMonotone : Error { using Error::Error; };
struct NotNegative : Error { using Error::Error; };
struct NonIntegerGenus : Error { using Error::Error; };
struct InexactDivision : Error { using Error::Error; };
struct ZeroAlexander : Error { using Error::Error; };
struct GradingMismatch : Error { using Error::Error; };
struct PatternMismatch : Error { using Error::Error; };
struct FormatError : Error { using Error::Error; };
struct Unsupported : Error { using Error::Error; };

}  // namespace b3
