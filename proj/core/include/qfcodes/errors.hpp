#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qfc {

enum class ErrorKind {
  InvalidPrime,
  InvalidDegree,
  SizeLimit,
  SingularBasis,
  NotASquare,
  DimError,
  FormulaDomainError,
  ZeroVector,
  NotAQuadraticForm,
  Unsupported,
  InternalInconsistency,
  Undefined,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it onto an exit code without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace qfc
