#include "kaj/transform.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "kaj/error.hpp"
#include "overloaded.hpp"

namespace kaj {

using detail::Overloaded;

std::optional<TimeAtom> normalize_atom(const TimeAtom& atom) {
  return std::visit(
      Overloaded{
          [](Power p) -> std::optional<TimeAtom> {
            if (p.exponent == 0) {
              return Const{};
            }
            return p;
          },
          [](const Sin& s) -> std::optional<TimeAtom> {
            if (s.rate == 0) {
              return std::nullopt;
            }
            return s;
          },
          [](const Sinh& s) -> std::optional<TimeAtom> {
            if (s.rate == 0) {
              return std::nullopt;
            }
            return s;
          },
          [](const auto& other) -> std::optional<TimeAtom> { return other; },
      },
      atom);
}

std::optional<ImageAtom> normalize_atom(const ImageAtom& atom) { return atom; }

template <class Atom>
LinearExpr<Atom>::LinearExpr(std::vector<term_type> terms) {
  std::vector<term_type> kept;
  kept.reserve(terms.size());
  for (auto& term : terms) {
    if (term.coeff == 0) {
      continue;
    }
    auto atom = normalize_atom(term.atom);
    if (!atom) {
      continue;
    }
    kept.push_back(term_type{std::move(term.coeff), std::move(*atom)});
  }
  std::stable_sort(kept.begin(), kept.end(),
                   [](const term_type& lhs, const term_type& rhs) {
                     return atom_less(lhs.atom, rhs.atom);
                   });
  for (auto& term : kept) {
    if (!terms_.empty() && terms_.back().atom == term.atom) {
      terms_.back().coeff += term.coeff;
      if (terms_.back().coeff == 0) {
        terms_.pop_back();
      }
    } else {
      terms_.push_back(std::move(term));
    }
  }
}

template <class Atom>
Rational LinearExpr<Atom>::coefficient(const Atom& atom) const {
  auto normalized = normalize_atom(atom);
  if (!normalized) {
    return 0;
  }
  auto it = std::lower_bound(terms_.begin(), terms_.end(), *normalized,
                             [](const term_type& term, const Atom& key) {
                               return atom_less(term.atom, key);
                             });
  if (it != terms_.end() && it->atom == *normalized) {
    return it->coeff;
  }
  return 0;
}

template class LinearExpr<TimeAtom>;
template class LinearExpr<ImageAtom>;

TransformedAtom transform_atom(const TimeAtom& atom) {
  return std::visit(
      Overloaded{
          [](Const) { return TransformedAtom{1, InvPow{1}}; },
          [](Power p) {
            return TransformedAtom{Rational(factorial(p.exponent)),
                                   InvPow{std::int64_t{p.exponent} + 1}};
          },
          [](const Exp& e) { return TransformedAtom{1, ExpImage{e.rate}}; },
          [](const Sin& s) { return TransformedAtom{s.rate, SinImage{s.rate}}; },
          [](const Cos& c) { return TransformedAtom{1, CosImage{c.rate}}; },
          [](const Sinh& s) {
            return TransformedAtom{s.rate, SinhImage{s.rate}};
          },
          [](const Cosh& c) { return TransformedAtom{1, CoshImage{c.rate}}; },
      },
      atom);
}

ImageExpr transform_expr(const TimeExpr& expr) {
  std::vector<ImageExpr::term_type> terms;
  terms.reserve(expr.size());
  for (const auto& term : expr.terms()) {
    auto image = transform_atom(term.atom);
    terms.push_back({term.coeff * image.coeff, std::move(image.image)});
  }
  return ImageExpr(std::move(terms));
}

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(Errc::kMalformedImage, what);
}

}  // namespace

InvertedAtom invert_atom(const Rational& coeff, const ImageAtom& image) {
  return std::visit(
      Overloaded{
          [&](InvPow p) -> InvertedAtom {
            if (p.offset < 1) {
              malformed("inverse-power offset must be >= 1, got " +
                        std::to_string(p.offset));
            }
            if (p.offset - 1 > std::numeric_limits<std::uint32_t>::max()) {
              malformed("inverse-power offset too large");
            }
            auto exponent = static_cast<std::uint32_t>(p.offset - 1);
            if (exponent == 0) {
              return {coeff, Const{}};
            }
            return {coeff / Rational(factorial(exponent)), Power{exponent}};
          },
          [&](const ExpImage& e) -> InvertedAtom { return {coeff, Exp{e.rate}}; },
          [&](const SinImage& s) -> InvertedAtom {
            if (s.rate == 0) {
              malformed("sine image requires a nonzero rate");
            }
            return {coeff / s.rate, Sin{s.rate}};
          },
          [&](const CosImage& c) -> InvertedAtom { return {coeff, Cos{c.rate}}; },
          [&](const SinhImage& s) -> InvertedAtom {
            if (s.rate == 0) {
              malformed("hyperbolic sine image requires a nonzero rate");
            }
            return {coeff / s.rate, Sinh{s.rate}};
          },
          [&](const CoshImage& c) -> InvertedAtom {
            return {coeff, Cosh{c.rate}};
          },
      },
      image);
}

TimeExpr invert_expr(const ImageExpr& image) {
  std::vector<TimeExpr::term_type> terms;
  terms.reserve(image.size());
  for (const auto& term : image.terms()) {
    auto inverted = invert_atom(term.coeff, term.atom);
    terms.push_back({std::move(inverted.coeff), std::move(inverted.atom)});
  }
  return TimeExpr(std::move(terms));
}

TimeExpr expand_carrier_series(std::span<const std::uint8_t> message,
                               const BigInt& beta) {
  if (message.empty()) {
    throw Error(Errc::kEmptyMessage, "message is empty");
  }
  if (beta < 1) {
    throw Error(Errc::kInvalidParams, "beta must be >= 1");
  }
  if (message.size() + 1 > std::numeric_limits<std::uint32_t>::max()) {
    throw Error(Errc::kInvalidParams, "message too long");
  }
  std::vector<TimeExpr::term_type> terms;
  terms.reserve(message.size());
  BigInt beta_power = 1;  // beta^(k-1)
  BigInt fact = 1;        // (k-1)!
  for (std::size_t i = 0; i < message.size(); ++i) {
    if (i > 0) {
      beta_power *= beta;
      fact *= i;
    }
    terms.push_back({Rational(message[i] * beta_power, fact),
                     Power{static_cast<std::uint32_t>(i + 2)}});
  }
  return TimeExpr(std::move(terms));
}

}  // namespace kaj
