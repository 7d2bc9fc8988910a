#pragma once

#include <stdexcept>
#include <string>

namespace setcat {

/// Base class of every error raised by this library. `kind()` is the stable
/// machine-readable tag; `what()` prepends it to the human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& detail)
      : std::runtime_error(kind + ": " + detail), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define SETCAT_ERROR_TYPE(NAME)                                      \
  struct NAME : Error {                                              \
    explicit NAME(const std::string& detail) : Error(#NAME, detail) {} \
  }

SETCAT_ERROR_TYPE(MalformedValue);
SETCAT_ERROR_TYPE(NotAFunction);
SETCAT_ERROR_TYPE(CompositionMismatch);
SETCAT_ERROR_TYPE(UniverseMismatch);
SETCAT_ERROR_TYPE(NotASubset);
SETCAT_ERROR_TYPE(EmptyUniverse);
SETCAT_ERROR_TYPE(NotARefinement);
SETCAT_ERROR_TYPE(EnumerationBudgetExceeded);
SETCAT_ERROR_TYPE(CodomainMismatch);
SETCAT_ERROR_TYPE(DomainMismatch);
SETCAT_ERROR_TYPE(NotParallel);
SETCAT_ERROR_TYPE(ConeConditionViolated);
SETCAT_ERROR_TYPE(ShapeMismatch);
SETCAT_ERROR_TYPE(NotBothUniversal);
SETCAT_ERROR_TYPE(BasepointNotInCarrier);
SETCAT_ERROR_TYPE(UnknownReference);
SETCAT_ERROR_TYPE(DuplicateName);

#undef SETCAT_ERROR_TYPE

/// Script syntax error with source position.
struct SyntaxError : Error {
  SyntaxError(int line, int col, const std::string& expected)
      : Error("SyntaxError", "line " + std::to_string(line) + ", col " +
                                 std::to_string(col) + ": expected " + expected),
        line(line),
        col(col) {}

  int line;
  int col;
};

}  // namespace setcat
