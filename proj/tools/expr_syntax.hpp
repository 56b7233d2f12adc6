#pragma once

// Text syntax for the `transform` subcommand.
//
// Input (forward direction) is a sum of basis atoms with optional rational
// scalars:
//
//   pow 2
//   2 sin 1 + 3 cosh 1
//   const 5/3 - 1/2 * exp -2
//
// Images are printed, and read back by --invert, in the form
//
//   2/c^(m+3) + 3/(c^(m-1)*(c^2+9)) - (1/2)/(c^(m-1)*(c+2))
//
// Time-domain results print as e.g. `1 + (1/2)*t^2 - 3*sin(2*t)`.

#include <stdexcept>
#include <string>
#include <string_view>

#include "kaj/transform.hpp"

namespace kaj::cli {

class SyntaxError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Throws SyntaxError on malformed input.
TimeExpr parse_basis_expr(std::string_view text);

/// Throws SyntaxError when the text is not an image expression and
/// Error(kMalformedImage) when it is one but matches no table entry
/// (e.g. an exponential factor under c^(m-2), or c^2+s with s not a square).
ImageExpr parse_image_expr(std::string_view text);

std::string format_rational(const Rational& value);

std::string render_time(const TimeExpr& expr);
std::string render_image(const ImageExpr& expr);

}  // namespace kaj::cli
