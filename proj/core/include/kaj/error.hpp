#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kaj {

enum class Errc {
  kEmptyMessage,
  kInvalidParams,
  kMalformedImage,
  kRemainderOutOfRange,
  kDivisibilityError,
  kByteRangeError,
  kLengthMismatch,
  kFormatError,
  kInvalidEncoding,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Raised by the file parsers; `line()` is 1-based.
class FormatError : public Error {
 public:
  FormatError(std::size_t line, const std::string& what);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace kaj
