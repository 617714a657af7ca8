#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace qfc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// q^k for a possibly negative exponent, exactly.
Rational rational_pow(std::uint64_t q, long long k);

BigInt int_pow(std::uint64_t q, unsigned k);

bool is_integral(const Rational& x);

/// Throws FormulaDomainError when x is not an integer. `what` names the
/// quantity for the diagnostic.
BigInt require_integer(const Rational& x, const std::string& what);

inline std::string to_decimal(const BigInt& x) { return x.str(); }

}  // namespace qfc
