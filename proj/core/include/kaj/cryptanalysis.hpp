#pragma once

// Ciphertext-only leakage: with beta and N public, every remainder pins its
// byte to the solutions of F * w_k = r_k (mod N), w_k the position weight.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "kaj/cipher.hpp"

namespace kaj {

struct CandidateReport {
  /// Sorted candidate bytes per position.
  std::vector<std::vector<std::uint8_t>> candidates;
  /// beta^(k-1) k (k+1) mod N per position.
  std::vector<BigInt> multipliers;
};

struct CrackOptions {
  /// Restrict candidates to printable ASCII [32, 126].
  bool printable_only = false;
};

/// All F in [0, 255] with F * (position weight mod N) = r (mod N).
std::vector<std::uint8_t> residue_candidates(const BigInt& remainder,
                                             std::size_t position,
                                             const CipherParams& params);

CandidateReport crack(const Ciphertext& ciphertext, CrackOptions options = {});

}  // namespace kaj
