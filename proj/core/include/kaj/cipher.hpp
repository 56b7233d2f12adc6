#pragma once

// Modular-split cipher over the carrier-series image coefficients.
//
// Each byte F_k becomes M_k = F_k * beta^(k-1) * k * (k+1). The ciphertext is
// the remainder stream r_k = M_k mod N; the secret key is the quotient stream
// q_k = floor(M_k / N). beta and N are public and travel with the ciphertext.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "kaj/numeric.hpp"

namespace kaj {

using Bytes = std::vector<std::uint8_t>;

class CipherParams {
 public:
  /// Throws Error(kInvalidParams) unless beta >= 1 and modulus >= 2.
  CipherParams(BigInt beta, BigInt modulus);

  const BigInt& beta() const noexcept { return beta_; }
  const BigInt& modulus() const noexcept { return modulus_; }

  friend bool operator==(const CipherParams&, const CipherParams&) = default;

 private:
  BigInt beta_;
  BigInt modulus_;
};

/// M_1..M_n; nonempty, every value nonnegative.
class ImageCoefficients {
 public:
  explicit ImageCoefficients(std::vector<BigInt> values);

  const std::vector<BigInt>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }

  friend bool operator==(const ImageCoefficients&,
                         const ImageCoefficients&) = default;

 private:
  std::vector<BigInt> values_;
};

class Ciphertext {
 public:
  /// Throws Error(kRemainderOutOfRange) if some r_k is outside [0, modulus).
  Ciphertext(std::vector<BigInt> remainders, CipherParams params);

  const std::vector<BigInt>& remainders() const noexcept { return remainders_; }
  const CipherParams& params() const noexcept { return params_; }
  std::size_t size() const noexcept { return remainders_.size(); }

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;

 private:
  std::vector<BigInt> remainders_;
  CipherParams params_;
};

class KeyStream {
 public:
  /// Throws Error(kInvalidParams) on a negative quotient.
  explicit KeyStream(std::vector<BigInt> quotients);

  const std::vector<BigInt>& quotients() const noexcept { return quotients_; }
  std::size_t size() const noexcept { return quotients_.size(); }

  friend bool operator==(const KeyStream&, const KeyStream&) = default;

 private:
  std::vector<BigInt> quotients_;
};

struct DivMod {
  BigInt quotient;
  BigInt remainder;

  friend bool operator==(const DivMod&, const DivMod&) = default;
};

struct Encrypted {
  Ciphertext ciphertext;
  KeyStream key;
};

/// beta^(k-1) * k * (k+1), the weight of position k (1-based).
BigInt position_weight(std::size_t position, const BigInt& beta);

ImageCoefficients image_coefficients(std::span<const std::uint8_t> message,
                                     const CipherParams& params);

/// Euclidean division of a nonnegative value by a modulus >= 2.
DivMod mod_split(const BigInt& value, const BigInt& modulus);

/// modulus * quotient + remainder. Throws Error(kRemainderOutOfRange) unless
/// 0 <= remainder < modulus.
BigInt mod_join(const BigInt& quotient, const BigInt& remainder,
                const BigInt& modulus);

/// Divides out the position weight. Throws Error(kDivisibilityError) when the
/// division is inexact and Error(kByteRangeError) when the quotient is > 255.
std::uint8_t recover_symbol(const BigInt& coefficient, std::size_t position,
                            const BigInt& beta);

Encrypted encrypt(std::span<const std::uint8_t> message,
                  const CipherParams& params);

/// Uses the parameters carried by the ciphertext. Throws
/// Error(kLengthMismatch) if the streams differ in length and
/// Error(kEmptyMessage) if they are empty.
Bytes decrypt(const Ciphertext& ciphertext, const KeyStream& key);

}  // namespace kaj
