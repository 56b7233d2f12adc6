#include "kaj/error.hpp"

namespace kaj {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::kEmptyMessage:
      return "EmptyMessage";
    case Errc::kInvalidParams:
      return "InvalidParams";
    case Errc::kMalformedImage:
      return "MalformedImage";
    case Errc::kRemainderOutOfRange:
      return "RemainderOutOfRange";
    case Errc::kDivisibilityError:
      return "DivisibilityError";
    case Errc::kByteRangeError:
      return "ByteRangeError";
    case Errc::kLengthMismatch:
      return "LengthMismatch";
    case Errc::kFormatError:
      return "FormatError";
    case Errc::kInvalidEncoding:
      return "InvalidEncoding";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(what), code_(code) {}

FormatError::FormatError(std::size_t line, const std::string& what)
    : Error(Errc::kFormatError, "line " + std::to_string(line) + ": " + what),
      line_(line) {}

}  // namespace kaj
