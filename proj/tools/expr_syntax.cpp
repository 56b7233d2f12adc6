#include "expr_syntax.hpp"

#include <cctype>
#include <charconv>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "kaj/error.hpp"

namespace kaj::cli {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

bool all_digits(std::string_view text) {
  if (text.empty()) return false;
  for (char ch : text) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

// "-3", "7/2", "-1/4"; denominators must be nonzero.
std::optional<Rational> parse_rational_token(std::string_view token) {
  bool negative = false;
  if (!token.empty() && token.front() == '-') {
    negative = true;
    token.remove_prefix(1);
  }
  std::string_view num = token;
  std::string_view den = "1";
  if (auto slash = token.find('/'); slash != std::string_view::npos) {
    num = token.substr(0, slash);
    den = token.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den)) {
    return std::nullopt;
  }
  BigInt d(std::string{den});
  if (d == 0) {
    return std::nullopt;
  }
  Rational value(BigInt(std::string{num}), d);
  return negative ? Rational(-value) : value;
}

// ---- basis grammar ---------------------------------------------------------

std::vector<std::string> tokenize_basis(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else if (ch == '+' || ch == '*') {
      flush();
      tokens.emplace_back(1, ch);
    } else {
      current += ch;
    }
  }
  flush();
  return tokens;
}

bool is_kind(std::string_view token) {
  return token == "const" || token == "pow" || token == "exp" ||
         token == "sin" || token == "cos" || token == "sinh" ||
         token == "cosh";
}

class BasisParser {
 public:
  explicit BasisParser(std::vector<std::string> tokens)
      : tokens_(std::move(tokens)) {}

  TimeExpr parse() {
    if (tokens_.empty()) {
      throw SyntaxError("empty expression");
    }
    if (tokens_.size() == 1 && tokens_[0] == "0") {
      return TimeExpr();
    }
    std::vector<TimeExpr::term_type> terms;
    terms.push_back(term(Rational(1)));
    while (pos_ < tokens_.size()) {
      const std::string& op = tokens_[pos_++];
      if (op == "+") {
        terms.push_back(term(Rational(1)));
      } else if (op == "-") {
        terms.push_back(term(Rational(-1)));
      } else {
        throw SyntaxError("expected '+' or '-' before '" + op + "'");
      }
    }
    return TimeExpr(std::move(terms));
  }

 private:
  const std::string& next(std::string_view what) {
    if (pos_ >= tokens_.size()) {
      throw SyntaxError("unexpected end of expression, expected " +
                        std::string(what));
    }
    return tokens_[pos_++];
  }

  TimeExpr::term_type term(Rational sign) {
    Rational scale = sign;
    std::string kind = next("a term");
    if (!is_kind(kind)) {
      auto scalar = parse_rational_token(kind);
      if (!scalar) {
        throw SyntaxError("unknown term '" + kind + "'");
      }
      scale *= *scalar;
      kind = next("a basis function");
      if (kind == "*") {
        kind = next("a basis function");
      }
      if (!is_kind(kind)) {
        throw SyntaxError("unknown basis function '" + kind + "'");
      }
    }
    const std::string& arg = next("an argument to '" + kind + "'");
    if (kind == "pow") {
      std::uint32_t exponent = 0;
      auto [ptr, ec] =
          std::from_chars(arg.data(), arg.data() + arg.size(), exponent);
      if (ec != std::errc() || ptr != arg.data() + arg.size()) {
        throw SyntaxError("pow expects a nonnegative integer, got '" + arg +
                          "'");
      }
      return {scale, Power{exponent}};
    }
    auto value = parse_rational_token(arg);
    if (!value) {
      throw SyntaxError("'" + kind + "' expects a rational argument, got '" +
                        arg + "'");
    }
    if (kind == "const") return {scale * *value, Const{}};
    if (kind == "exp") return {scale, Exp{*value}};
    if (kind == "sin") return {scale, Sin{*value}};
    if (kind == "cos") return {scale, Cos{*value}};
    if (kind == "sinh") return {scale, Sinh{*value}};
    return {scale, Cosh{*value}};
  }

  std::vector<std::string> tokens_;
  std::size_t pos_ = 0;
};

// ---- image grammar ---------------------------------------------------------

class ImageParser {
 public:
  explicit ImageParser(std::string_view text) : text_(text) {}

  ImageExpr parse() {
    skip_space();
    if (peek() == '0') {
      std::size_t save = pos_;
      ++pos_;
      skip_space();
      if (pos_ == text_.size()) return ImageExpr();
      pos_ = save;
    }
    std::vector<ImageExpr::term_type> terms;
    terms.push_back(term(Rational(1)));
    while (true) {
      skip_space();
      if (pos_ == text_.size()) break;
      char op = text_[pos_++];
      if (op == '+') {
        terms.push_back(term(Rational(1)));
      } else if (op == '-') {
        terms.push_back(term(Rational(-1)));
      } else {
        fail("expected '+' or '-'");
      }
    }
    return ImageExpr(std::move(terms));
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw SyntaxError(what + " at offset " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  bool accept(char ch) {
    skip_space();
    if (peek() == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }

  BigInt integer() {
    skip_space();
    std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  Rational ratio() {
    BigInt num = integer();
    BigInt den = 1;
    if (accept('/')) {
      den = integer();
      if (den == 0) fail("zero denominator");
    }
    return Rational(num, den);
  }

  // integer | "(" ["-"] integer ["/" integer] ")"
  Rational coefficient() {
    if (accept('(')) {
      bool negative = accept('-');
      Rational value = ratio();
      expect(')');
      return negative ? Rational(-value) : value;
    }
    return Rational(integer());
  }

  // "m" | "(" "m" ("+"|"-") integer ")"
  std::int64_t order_offset() {
    if (!accept('(')) {
      expect('m');
      return 0;
    }
    expect('m');
    std::int64_t sign = 0;
    if (accept('+')) {
      sign = 1;
    } else if (accept('-')) {
      sign = -1;
    } else {
      fail("expected '+' or '-' after m");
    }
    BigInt magnitude = integer();
    expect(')');
    if (magnitude > std::numeric_limits<std::int64_t>::max()) {
      fail("order offset too large");
    }
    return sign * magnitude.convert_to<std::int64_t>();
  }

  ImageExpr::term_type term(Rational sign) {
    if (accept('-')) sign = -sign;
    Rational coeff = sign * coefficient();
    expect('/');
    if (!accept('(')) {
      expect('c');
      expect('^');
      return {coeff, InvPow{order_offset()}};
    }
    expect('c');
    expect('^');
    std::int64_t offset = order_offset();
    expect('*');
    expect('(');
    expect('c');
    bool quadratic = false;
    if (accept('^')) {
      skip_space();
      if (integer() != 2) fail("expected c^2");
      quadratic = true;
    }
    bool plus = false;
    if (accept('+')) {
      plus = true;
    } else if (!accept('-')) {
      fail("expected '+' or '-'");
    }
    Rational value = ratio();
    expect(')');
    expect(')');
    return {coeff, product_atom(offset, quadratic, plus, value)};
  }

  static ImageAtom product_atom(std::int64_t offset, bool quadratic, bool plus,
                                const Rational& value) {
    if (!quadratic) {
      if (offset != -1) {
        throw Error(Errc::kMalformedImage,
                    "exponential image must have the form "
                    "k/(c^(m-1)*(c-a))");
      }
      return ExpImage{plus ? Rational(-value) : value};
    }
    auto rate = exact_sqrt(value);
    if (!rate) {
      throw Error(Errc::kMalformedImage,
                  format_rational(value) + " is not the square of a rational");
    }
    if (offset == -1) {
      return plus ? ImageAtom{SinImage{*rate}} : ImageAtom{SinhImage{*rate}};
    }
    if (offset == -2) {
      return plus ? ImageAtom{CosImage{*rate}} : ImageAtom{CoshImage{*rate}};
    }
    throw Error(Errc::kMalformedImage,
                "quadratic images must sit under c^(m-1) or c^(m-2)");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// ---- rendering -------------------------------------------------------------

// Integer coefficients print bare, fractions parenthesized.
std::string format_factor(const Rational& value) {
  if (boost::multiprecision::denominator(value) == 1) {
    return format_rational(value);
  }
  return "(" + format_rational(value) + ")";
}

std::string format_offset(std::int64_t offset) {
  if (offset == 0) return "m";
  if (offset > 0) return "(m+" + std::to_string(offset) + ")";
  return "(m-" + std::to_string(-offset) + ")";
}

std::string format_rate_argument(const Rational& rate) {
  if (rate == 1) return "t";
  if (rate == -1) return "-t";
  return format_factor(rate) + "*t";
}

std::string time_atom_text(const TimeAtom& atom) {
  return std::visit(
      Overloaded{
          [](Const) { return std::string(); },
          [](Power p) {
            return p.exponent == 1 ? std::string("t")
                                   : "t^" + std::to_string(p.exponent);
          },
          [](const Exp& a) { return "exp(" + format_rate_argument(a.rate) + ")"; },
          [](const Sin& a) { return "sin(" + format_rate_argument(a.rate) + ")"; },
          [](const Cos& a) { return "cos(" + format_rate_argument(a.rate) + ")"; },
          [](const Sinh& a) {
            return "sinh(" + format_rate_argument(a.rate) + ")";
          },
          [](const Cosh& a) {
            return "cosh(" + format_rate_argument(a.rate) + ")";
          },
      },
      atom);
}

std::string image_denominator(const ImageAtom& atom) {
  auto quadratic = [](std::int64_t offset, char sign, const Rational& rate) {
    return "(c^" + format_offset(offset) + "*(c^2" + sign +
           format_rational(rate * rate) + "))";
  };
  return std::visit(
      Overloaded{
          [](InvPow p) { return "c^" + format_offset(p.offset); },
          [](const ExpImage& a) {
            std::string factor = a.rate < 0 ? "c+" + format_rational(-a.rate)
                                            : "c-" + format_rational(a.rate);
            return "(c^" + format_offset(-1) + "*(" + factor + "))";
          },
          [&](const SinImage& a) { return quadratic(-1, '+', a.rate); },
          [&](const CosImage& a) { return quadratic(-2, '+', a.rate); },
          [&](const SinhImage& a) { return quadratic(-1, '-', a.rate); },
          [&](const CoshImage& a) { return quadratic(-2, '-', a.rate); },
      },
      atom);
}

template <class Expr, class TermText>
std::string render_sum(const Expr& expr, TermText term_text) {
  if (expr.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& term : expr.terms()) {
    bool negative = term.coeff < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += term_text(negative ? Rational(-term.coeff) : term.coeff, term.atom);
    first = false;
  }
  return out;
}

}  // namespace

TimeExpr parse_basis_expr(std::string_view text) {
  return BasisParser(tokenize_basis(text)).parse();
}

ImageExpr parse_image_expr(std::string_view text) {
  return ImageParser(text).parse();
}

std::string format_rational(const Rational& value) {
  const BigInt& num = boost::multiprecision::numerator(value);
  const BigInt& den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string render_time(const TimeExpr& expr) {
  return render_sum(expr, [](const Rational& magnitude, const TimeAtom& atom) {
    if (std::holds_alternative<Const>(atom)) {
      return format_rational(magnitude);
    }
    std::string body = time_atom_text(atom);
    if (magnitude == 1) return body;
    return format_factor(magnitude) + "*" + body;
  });
}

std::string render_image(const ImageExpr& expr) {
  return render_sum(expr, [](const Rational& magnitude, const ImageAtom& atom) {
    return format_factor(magnitude) + "/" + image_denominator(atom);
  });
}

}  // namespace kaj::cli
