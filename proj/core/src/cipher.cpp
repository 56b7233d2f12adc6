#include "kaj/cipher.hpp"

#include <string>

#include "kaj/error.hpp"

namespace kaj {

CipherParams::CipherParams(BigInt beta, BigInt modulus)
    : beta_(std::move(beta)), modulus_(std::move(modulus)) {
  if (beta_ < 1) {
    throw Error(Errc::kInvalidParams,
                "beta must be >= 1, got " + to_decimal(beta_));
  }
  if (modulus_ < 2) {
    throw Error(Errc::kInvalidParams,
                "modulus must be >= 2, got " + to_decimal(modulus_));
  }
}

ImageCoefficients::ImageCoefficients(std::vector<BigInt> values)
    : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(Errc::kEmptyMessage, "no image coefficients");
  }
  for (const auto& value : values_) {
    if (value < 0) {
      throw Error(Errc::kInvalidParams, "image coefficient is negative");
    }
  }
}

Ciphertext::Ciphertext(std::vector<BigInt> remainders, CipherParams params)
    : remainders_(std::move(remainders)), params_(std::move(params)) {
  for (std::size_t i = 0; i < remainders_.size(); ++i) {
    const auto& r = remainders_[i];
    if (r < 0 || r >= params_.modulus()) {
      throw Error(Errc::kRemainderOutOfRange,
                  "remainder r_" + std::to_string(i + 1) + " = " +
                      to_decimal(r) + " outside [0, " +
                      to_decimal(params_.modulus()) + ")");
    }
  }
}

KeyStream::KeyStream(std::vector<BigInt> quotients)
    : quotients_(std::move(quotients)) {
  for (std::size_t i = 0; i < quotients_.size(); ++i) {
    if (quotients_[i] < 0) {
      throw Error(Errc::kInvalidParams,
                  "quotient q_" + std::to_string(i + 1) + " is negative");
    }
  }
}

BigInt position_weight(std::size_t position, const BigInt& beta) {
  BigInt k = position;
  return power(beta, position - 1) * k * (k + 1);
}

ImageCoefficients image_coefficients(std::span<const std::uint8_t> message,
                                     const CipherParams& params) {
  if (message.empty()) {
    throw Error(Errc::kEmptyMessage, "message is empty");
  }
  std::vector<BigInt> values;
  values.reserve(message.size());
  BigInt beta_power = 1;
  for (std::size_t i = 0; i < message.size(); ++i) {
    if (i > 0) {
      beta_power *= params.beta();
    }
    BigInt k = i + 1;
    values.emplace_back(beta_power * message[i] * k * (k + 1));
  }
  return ImageCoefficients(std::move(values));
}

DivMod mod_split(const BigInt& value, const BigInt& modulus) {
  if (value < 0 || modulus < 2) {
    throw Error(Errc::kInvalidParams,
                "mod_split requires value >= 0 and modulus >= 2");
  }
  DivMod out;
  boost::multiprecision::divide_qr(value, modulus, out.quotient, out.remainder);
  return out;
}

BigInt mod_join(const BigInt& quotient, const BigInt& remainder,
                const BigInt& modulus) {
  if (remainder < 0 || remainder >= modulus) {
    throw Error(Errc::kRemainderOutOfRange,
                "remainder " + to_decimal(remainder) + " outside [0, " +
                    to_decimal(modulus) + ")");
  }
  if (quotient < 0) {
    throw Error(Errc::kInvalidParams, "quotient is negative");
  }
  return modulus * quotient + remainder;
}

std::uint8_t recover_symbol(const BigInt& coefficient, std::size_t position,
                            const BigInt& beta) {
  if (position < 1 || beta < 1 || coefficient < 0) {
    throw Error(Errc::kInvalidParams,
                "recover_symbol requires position >= 1, beta >= 1 and a "
                "nonnegative coefficient");
  }
  BigInt weight = position_weight(position, beta);
  BigInt symbol;
  BigInt rest;
  boost::multiprecision::divide_qr(coefficient, weight, symbol, rest);
  if (rest != 0) {
    throw Error(Errc::kDivisibilityError,
                "M_" + std::to_string(position) + " = " +
                    to_decimal(coefficient) + " is not divisible by " +
                    to_decimal(weight));
  }
  if (symbol > 255) {
    throw Error(Errc::kByteRangeError,
                "position " + std::to_string(position) + " decodes to " +
                    to_decimal(symbol) + ", outside the byte range");
  }
  return symbol.convert_to<std::uint8_t>();
}

Encrypted encrypt(std::span<const std::uint8_t> message,
                  const CipherParams& params) {
  auto coefficients = image_coefficients(message, params);
  std::vector<BigInt> remainders;
  std::vector<BigInt> quotients;
  remainders.reserve(coefficients.size());
  quotients.reserve(coefficients.size());
  for (const auto& m : coefficients.values()) {
    auto split = mod_split(m, params.modulus());
    quotients.push_back(std::move(split.quotient));
    remainders.push_back(std::move(split.remainder));
  }
  return {Ciphertext(std::move(remainders), params),
          KeyStream(std::move(quotients))};
}

Bytes decrypt(const Ciphertext& ciphertext, const KeyStream& key) {
  if (ciphertext.size() != key.size()) {
    throw Error(Errc::kLengthMismatch,
                "ciphertext has " + std::to_string(ciphertext.size()) +
                    " remainders but key has " + std::to_string(key.size()) +
                    " quotients");
  }
  if (ciphertext.size() == 0) {
    throw Error(Errc::kEmptyMessage, "ciphertext is empty");
  }
  const auto& params = ciphertext.params();
  Bytes out;
  out.reserve(ciphertext.size());
  for (std::size_t i = 0; i < ciphertext.size(); ++i) {
    BigInt m = mod_join(key.quotients()[i], ciphertext.remainders()[i],
                        params.modulus());
    out.push_back(recover_symbol(m, i + 1, params.beta()));
  }
  return out;
}

}  // namespace kaj
