#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace kaj {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(std::uint64_t n);

/// `base` raised to `exponent` by repeated squaring.
BigInt power(const BigInt& base, std::uint64_t exponent);

std::string to_decimal(const BigInt& value);

/// Parses a canonical nonnegative decimal: digits only, no sign, no leading
/// zeros except for "0" itself.
std::optional<BigInt> parse_canonical_decimal(std::string_view text);

/// Exact rational square root, or nullopt if `value` is not the square of a
/// nonnegative rational.
std::optional<Rational> exact_sqrt(const Rational& value);

}  // namespace kaj
