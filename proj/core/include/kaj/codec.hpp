#pragma once

#include <span>
#include <string>
#include <string_view>

#include "kaj/cipher.hpp"

namespace kaj {

inline constexpr std::string_view kCiphertextExtension = ".kajc";
inline constexpr std::string_view kKeyExtension = ".kajk";

Bytes encode_plaintext(std::string_view text);

/// Throws Error(kInvalidEncoding) unless `bytes` is well-formed UTF-8.
std::string decode_plaintext(std::span<const std::uint8_t> bytes);

// File formats (ASCII, LF-terminated lines, keys in fixed order):
//
//   KAJ1 CIPHERTEXT        KAJ1 KEY
//   beta=<decimal>         n=<decimal>
//   modulus=<decimal>      q=<d>,<d>,...
//   n=<decimal>
//   r=<d>,<d>,...
//
// Parsers accept exactly the canonical form and throw FormatError otherwise.

std::string serialize_ciphertext(const Ciphertext& ciphertext);
Ciphertext parse_ciphertext(std::string_view text);

std::string serialize_key(const KeyStream& key);
KeyStream parse_key(std::string_view text);

/// Display-only view: each r mod 256 as a character, printable ASCII passed
/// through and everything else (plus backslash) as \xHH.
std::string render_legacy_glyphs(const Ciphertext& ciphertext);

/// Escapes one byte as render_legacy_glyphs does.
std::string escape_byte(std::uint8_t byte);

}  // namespace kaj
