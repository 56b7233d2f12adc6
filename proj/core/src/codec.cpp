#include "kaj/codec.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "kaj/error.hpp"

namespace kaj {

Bytes encode_plaintext(std::string_view text) {
  return Bytes(text.begin(), text.end());
}

namespace {

// Length of the well-formed UTF-8 sequence starting at bytes[i], or 0.
std::size_t utf8_sequence_length(std::span<const std::uint8_t> bytes,
                                 std::size_t i) {
  const std::uint8_t lead = bytes[i];
  if (lead < 0x80) {
    return 1;
  }
  std::size_t length = 0;
  std::uint8_t lo = 0x80;
  std::uint8_t hi = 0xBF;
  if (lead >= 0xC2 && lead <= 0xDF) {
    length = 2;
  } else if (lead >= 0xE0 && lead <= 0xEF) {
    length = 3;
    if (lead == 0xE0) lo = 0xA0;
    if (lead == 0xED) hi = 0x9F;  // no surrogates
  } else if (lead >= 0xF0 && lead <= 0xF4) {
    length = 4;
    if (lead == 0xF0) lo = 0x90;
    if (lead == 0xF4) hi = 0x8F;
  } else {
    return 0;
  }
  if (i + length > bytes.size()) {
    return 0;
  }
  if (bytes[i + 1] < lo || bytes[i + 1] > hi) {
    return 0;
  }
  for (std::size_t j = 2; j < length; ++j) {
    if (bytes[i + j] < 0x80 || bytes[i + j] > 0xBF) {
      return 0;
    }
  }
  return length;
}

}  // namespace

std::string decode_plaintext(std::span<const std::uint8_t> bytes) {
  for (std::size_t i = 0; i < bytes.size();) {
    std::size_t length = utf8_sequence_length(bytes, i);
    if (length == 0) {
      throw Error(Errc::kInvalidEncoding,
                  "invalid UTF-8 at byte offset " + std::to_string(i));
    }
    i += length;
  }
  return std::string(bytes.begin(), bytes.end());
}

namespace {

constexpr std::string_view kCiphertextHeader = "KAJ1 CIPHERTEXT";
constexpr std::string_view kKeyHeader = "KAJ1 KEY";

std::string join_decimals(const std::vector<BigInt>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) {
      out += ',';
    }
    out += to_decimal(values[i]);
  }
  return out;
}

// Splits a canonical file into its lines. Every line must end in LF and
// contain printable ASCII only.
std::vector<std::string_view> split_lines(std::string_view text) {
  if (text.empty()) {
    throw FormatError(1, "empty file");
  }
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    std::size_t line_no = lines.size() + 1;
    if (end == std::string_view::npos) {
      throw FormatError(line_no, "missing final newline");
    }
    std::string_view line = text.substr(start, end - start);
    for (char ch : line) {
      if (ch == '\r') {
        throw FormatError(line_no, "carriage return in line");
      }
      if (ch < 0x20 || ch > 0x7E) {
        throw FormatError(line_no, "non-printable character in line");
      }
    }
    if (!line.empty() && line.back() == ' ') {
      throw FormatError(line_no, "trailing whitespace");
    }
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

// Reads the `key=value` line at `index` of a file whose body keys must appear
// exactly in the order given by `keys`.
class KeyedReader {
 public:
  KeyedReader(std::vector<std::string_view> lines,
              std::vector<std::string_view> keys)
      : lines_(std::move(lines)), keys_(std::move(keys)) {}

  void expect_header(std::string_view header) const {
    if (lines_.empty() || lines_[0] != header) {
      throw FormatError(1, "bad header, expected '" + std::string(header) + "'");
    }
  }

  std::string_view value(std::size_t key_index) const {
    const std::string_view expected = keys_[key_index];
    const std::size_t line_index = key_index + 1;
    const std::size_t line_no = line_index + 1;
    if (line_index >= lines_.size()) {
      throw FormatError(line_no, "missing '" + std::string(expected) + "' line");
    }
    std::string_view line = lines_[line_index];
    std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw FormatError(line_no, "expected key=value");
    }
    std::string_view key = line.substr(0, eq);
    if (key != expected) {
      auto pos = std::find(keys_.begin(), keys_.end(), key);
      if (pos == keys_.end()) {
        throw FormatError(line_no, "unknown key '" + std::string(key) + "'");
      }
      if (static_cast<std::size_t>(pos - keys_.begin()) < key_index) {
        throw FormatError(line_no, "duplicate key '" + std::string(key) + "'");
      }
      throw FormatError(line_no, "out-of-order key '" + std::string(key) +
                                     "', expected '" + std::string(expected) +
                                     "'");
    }
    return line.substr(eq + 1);
  }

  void expect_end() const {
    if (lines_.size() > keys_.size() + 1) {
      throw FormatError(keys_.size() + 2, "unexpected trailing content");
    }
  }

  std::size_t line_of(std::size_t key_index) const { return key_index + 2; }

 private:
  std::vector<std::string_view> lines_;
  std::vector<std::string_view> keys_;
};

BigInt parse_integer(std::string_view text, std::size_t line_no) {
  auto value = parse_canonical_decimal(text);
  if (!value) {
    throw FormatError(line_no,
                      "'" + std::string(text) + "' is not a canonical decimal");
  }
  return *value;
}

std::vector<BigInt> parse_list(std::string_view text, std::size_t line_no) {
  std::vector<BigInt> values;
  if (text.empty()) {
    return values;
  }
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    values.push_back(parse_integer(text.substr(start, comma - start), line_no));
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return values;
}

void check_count(const BigInt& n, std::size_t n_line,
                 const std::vector<BigInt>& values, std::size_t list_line) {
  if (n < 1) {
    throw FormatError(n_line, "n must be >= 1");
  }
  if (n != values.size()) {
    throw FormatError(list_line, "n=" + to_decimal(n) + " but list has " +
                                     std::to_string(values.size()) +
                                     " entries");
  }
}

}  // namespace

std::string serialize_ciphertext(const Ciphertext& ciphertext) {
  std::string out;
  out += kCiphertextHeader;
  out += "\nbeta=" + to_decimal(ciphertext.params().beta());
  out += "\nmodulus=" + to_decimal(ciphertext.params().modulus());
  out += "\nn=" + std::to_string(ciphertext.size());
  out += "\nr=" + join_decimals(ciphertext.remainders());
  out += '\n';
  return out;
}

Ciphertext parse_ciphertext(std::string_view text) {
  KeyedReader reader(split_lines(text), {"beta", "modulus", "n", "r"});
  reader.expect_header(kCiphertextHeader);
  BigInt beta = parse_integer(reader.value(0), reader.line_of(0));
  BigInt modulus = parse_integer(reader.value(1), reader.line_of(1));
  BigInt n = parse_integer(reader.value(2), reader.line_of(2));
  auto remainders = parse_list(reader.value(3), reader.line_of(3));
  reader.expect_end();

  if (beta < 1) {
    throw FormatError(reader.line_of(0), "beta must be >= 1");
  }
  if (modulus < 2) {
    throw FormatError(reader.line_of(1), "modulus must be >= 2");
  }
  check_count(n, reader.line_of(2), remainders, reader.line_of(3));
  for (std::size_t i = 0; i < remainders.size(); ++i) {
    if (remainders[i] >= modulus) {
      throw FormatError(reader.line_of(3),
                        "r_" + std::to_string(i + 1) + " = " +
                            to_decimal(remainders[i]) + " is not below modulus");
    }
  }
  return Ciphertext(std::move(remainders),
                    CipherParams(std::move(beta), std::move(modulus)));
}

std::string serialize_key(const KeyStream& key) {
  std::string out;
  out += kKeyHeader;
  out += "\nn=" + std::to_string(key.size());
  out += "\nq=" + join_decimals(key.quotients());
  out += '\n';
  return out;
}

KeyStream parse_key(std::string_view text) {
  KeyedReader reader(split_lines(text), {"n", "q"});
  reader.expect_header(kKeyHeader);
  BigInt n = parse_integer(reader.value(0), reader.line_of(0));
  auto quotients = parse_list(reader.value(1), reader.line_of(1));
  reader.expect_end();
  check_count(n, reader.line_of(0), quotients, reader.line_of(1));
  return KeyStream(std::move(quotients));
}

std::string escape_byte(std::uint8_t byte) {
  if (byte >= 0x20 && byte <= 0x7E && byte != '\\') {
    return std::string(1, static_cast<char>(byte));
  }
  std::array<char, 5> buf{};
  std::snprintf(buf.data(), buf.size(), "\\x%02x", byte);
  return std::string(buf.data(), 4);
}

std::string render_legacy_glyphs(const Ciphertext& ciphertext) {
  std::string out;
  for (const auto& r : ciphertext.remainders()) {
    BigInt low = r % 256;
    out += escape_byte(low.convert_to<std::uint8_t>());
  }
  return out;
}

}  // namespace kaj
