#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jetsym {

enum class ErrorKind {
  UnknownSymbol,
  SyntaxError,
  DivisionByZero,
  JetOrderOverflow,
  UnsupportedExtension,
  InconsistentRelations,
  DegenerateSampling,
  NotATotalDerivative,
  IntegrandOutsideClass,
  NotAffine,
  NotClosedForm,
  InvalidEquation,
  UnknownFixture,
  MissingParameter,
  ManifestError,
  BudgetExceeded,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace jetsym
