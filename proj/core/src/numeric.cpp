#include "kaj/numeric.hpp"

#include <algorithm>

namespace kaj {

BigInt factorial(std::uint64_t n) {
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

BigInt power(const BigInt& base, std::uint64_t exponent) {
  BigInt result = 1;
  BigInt square = base;
  while (exponent != 0) {
    if (exponent & 1U) {
      result *= square;
    }
    exponent >>= 1U;
    if (exponent != 0) {
      square *= square;
    }
  }
  return result;
}

std::string to_decimal(const BigInt& value) { return value.str(); }

std::optional<BigInt> parse_canonical_decimal(std::string_view text) {
  if (text.empty()) {
    return std::nullopt;
  }
  if (!std::all_of(text.begin(), text.end(),
                   [](char ch) { return ch >= '0' && ch <= '9'; })) {
    return std::nullopt;
  }
  if (text.size() > 1 && text.front() == '0') {
    return std::nullopt;
  }
  return BigInt(std::string(text));
}

namespace {

std::optional<BigInt> exact_isqrt(const BigInt& value) {
  if (value < 0) {
    return std::nullopt;
  }
  BigInt root = boost::multiprecision::sqrt(value);
  if (root * root != value) {
    return std::nullopt;
  }
  return root;
}

}  // namespace

std::optional<Rational> exact_sqrt(const Rational& value) {
  auto num = exact_isqrt(boost::multiprecision::numerator(value));
  auto den = exact_isqrt(boost::multiprecision::denominator(value));
  if (!num || !den) {
    return std::nullopt;
  }
  return Rational(*num, *den);
}

}  // namespace kaj
