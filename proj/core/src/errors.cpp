#include "qfcodes/errors.hpp"

#include "qfcodes/numeric.hpp"

namespace qfc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidPrime: return "InvalidPrime";
    case ErrorKind::InvalidDegree: return "InvalidDegree";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::SingularBasis: return "SingularBasis";
    case ErrorKind::NotASquare: return "NotASquare";
    case ErrorKind::DimError: return "DimError";
    case ErrorKind::FormulaDomainError: return "FormulaDomainError";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::NotAQuadraticForm: return "NotAQuadraticForm";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::Undefined: return "Undefined";
    case ErrorKind::InvalidInput: return "InvalidInput";
  }
  return "Unknown";
}

Rational rational_pow(std::uint64_t q, long long k) {
  BigInt base = int_pow(q, static_cast<unsigned>(k < 0 ? -k : k));
  if (k >= 0) return Rational(base);
  return Rational(BigInt(1), base);
}

BigInt int_pow(std::uint64_t q, unsigned k) {
  BigInt result = 1;
  BigInt base = q;
  while (k != 0) {
    if (k & 1U) result *= base;
    base *= base;
    k >>= 1U;
  }
  return result;
}

bool is_integral(const Rational& x) {
  return boost::multiprecision::denominator(x) == 1;
}

BigInt require_integer(const Rational& x, const std::string& what) {
  if (!is_integral(x)) {
    throw Error(ErrorKind::FormulaDomainError, what + " evaluates to non-integer " + x.str());
  }
  return boost::multiprecision::numerator(x);
}

}  // namespace qfc
