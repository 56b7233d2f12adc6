#include "kaj/cryptanalysis.hpp"

namespace kaj {

std::vector<std::uint8_t> residue_candidates(const BigInt& remainder,
                                             std::size_t position,
                                             const CipherParams& params) {
  const BigInt& modulus = params.modulus();
  const BigInt multiplier = position_weight(position, params.beta()) % modulus;
  std::vector<std::uint8_t> out;
  BigInt residue = 0;  // F * multiplier mod N, advanced incrementally
  for (unsigned f = 0; f <= 255; ++f) {
    if (residue == remainder) {
      out.push_back(static_cast<std::uint8_t>(f));
    }
    residue += multiplier;
    if (residue >= modulus) {
      residue -= modulus;
    }
  }
  return out;
}

CandidateReport crack(const Ciphertext& ciphertext, CrackOptions options) {
  CandidateReport report;
  const auto& params = ciphertext.params();
  report.candidates.reserve(ciphertext.size());
  report.multipliers.reserve(ciphertext.size());
  for (std::size_t i = 0; i < ciphertext.size(); ++i) {
    const std::size_t position = i + 1;
    auto set = residue_candidates(ciphertext.remainders()[i], position, params);
    if (options.printable_only) {
      std::erase_if(set, [](std::uint8_t b) { return b < 32 || b > 126; });
    }
    report.candidates.push_back(std::move(set));
    report.multipliers.push_back(position_weight(position, params.beta()) %
                                 params.modulus());
  }
  return report;
}

}  // namespace kaj
