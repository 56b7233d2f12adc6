#pragma once

// Table-driven KAJ transform over a fixed function basis.
//
// Time-domain expressions are finite sums of rational-weighted atoms in t.
// Their images are finite sums of atoms in c that carry the transform order m
// only as a symbolic exponent offset; no numeric m is ever needed.
//
//   const             ->  1 / c^(m+1)
//   t^p               ->  p! / c^(m+p+1)
//   exp(a t)          ->  1 / (c^(m-1) (c - a))
//   sin(a t)          ->  a / (c^(m-1) (c^2 + a^2))
//   cos(a t)          ->  1 / (c^(m-2) (c^2 + a^2))
//   sinh(a t)         ->  a / (c^(m-1) (c^2 - a^2))
//   cosh(a t)         ->  1 / (c^(m-2) (c^2 - a^2))

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "kaj/numeric.hpp"

namespace kaj {

/// An atom parameterized by a single rate a (the alpha of exp/sin/...).
template <class Tag>
struct RateAtom {
  Rational rate;

  friend bool operator==(const RateAtom& lhs, const RateAtom& rhs) {
    return lhs.rate == rhs.rate;
  }
  friend bool operator<(const RateAtom& lhs, const RateAtom& rhs) {
    return lhs.rate < rhs.rate;
  }
};

// ---- time domain -----------------------------------------------------------

struct Const {
  friend bool operator==(Const, Const) { return true; }
  friend bool operator<(Const, Const) { return false; }
};

/// t^exponent. Power{0} normalizes to Const.
struct Power {
  std::uint32_t exponent;

  friend bool operator==(Power lhs, Power rhs) {
    return lhs.exponent == rhs.exponent;
  }
  friend bool operator<(Power lhs, Power rhs) {
    return lhs.exponent < rhs.exponent;
  }
};

using Exp = RateAtom<struct ExpTag>;
using Sin = RateAtom<struct SinTag>;
using Cos = RateAtom<struct CosTag>;
using Sinh = RateAtom<struct SinhTag>;
using Cosh = RateAtom<struct CoshTag>;

using TimeAtom = std::variant<Const, Power, Exp, Sin, Cos, Sinh, Cosh>;

// ---- image domain ----------------------------------------------------------

/// 1 / c^(m + offset); canonical images have offset >= 1.
struct InvPow {
  std::int64_t offset;

  friend bool operator==(InvPow lhs, InvPow rhs) {
    return lhs.offset == rhs.offset;
  }
  friend bool operator<(InvPow lhs, InvPow rhs) {
    return lhs.offset < rhs.offset;
  }
};

using ExpImage = RateAtom<struct ExpImageTag>;
using SinImage = RateAtom<struct SinImageTag>;
using CosImage = RateAtom<struct CosImageTag>;
using SinhImage = RateAtom<struct SinhImageTag>;
using CoshImage = RateAtom<struct CoshImageTag>;

using ImageAtom =
    std::variant<InvPow, ExpImage, SinImage, CosImage, SinhImage, CoshImage>;

/// Canonical atom order: variant alternative first, then parameter.
template <class Atom>
bool atom_less(const Atom& lhs, const Atom& rhs) {
  if (lhs.index() != rhs.index()) {
    return lhs.index() < rhs.index();
  }
  return std::visit(
      [&rhs](const auto& l) {
        return l < std::get<std::decay_t<decltype(l)>>(rhs);
      },
      lhs);
}

/// Returns the canonical form of `atom`, or nullopt when it denotes the zero
/// function (sin 0t, sinh 0t).
std::optional<TimeAtom> normalize_atom(const TimeAtom& atom);
std::optional<ImageAtom> normalize_atom(const ImageAtom& atom);

template <class Atom>
struct Term {
  Rational coeff;
  Atom atom;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Finite linear combination of atoms, kept normalized: atoms are canonical,
/// sorted by atom_less, pairwise distinct, and every coefficient is nonzero.
template <class Atom>
class LinearExpr {
 public:
  using term_type = Term<Atom>;

  LinearExpr() = default;
  explicit LinearExpr(std::vector<term_type> terms);

  static LinearExpr single(Rational coeff, Atom atom) {
    return LinearExpr({term_type{std::move(coeff), std::move(atom)}});
  }

  const std::vector<term_type>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  /// Coefficient of `atom` (after normalization), zero if absent.
  Rational coefficient(const Atom& atom) const;

  friend bool operator==(const LinearExpr&, const LinearExpr&) = default;

  friend LinearExpr operator+(const LinearExpr& lhs, const LinearExpr& rhs) {
    std::vector<term_type> all = lhs.terms_;
    all.insert(all.end(), rhs.terms_.begin(), rhs.terms_.end());
    return LinearExpr(std::move(all));
  }
  friend LinearExpr operator*(const Rational& scale, const LinearExpr& expr) {
    std::vector<term_type> scaled = expr.terms_;
    for (auto& term : scaled) {
      term.coeff *= scale;
    }
    return LinearExpr(std::move(scaled));
  }
  friend LinearExpr operator-(const LinearExpr& lhs, const LinearExpr& rhs) {
    return lhs + Rational(-1) * rhs;
  }

 private:
  std::vector<term_type> terms_;
};

extern template class LinearExpr<TimeAtom>;
extern template class LinearExpr<ImageAtom>;

using TimeExpr = LinearExpr<TimeAtom>;
using ImageExpr = LinearExpr<ImageAtom>;

struct TransformedAtom {
  Rational coeff;
  ImageAtom image;

  friend bool operator==(const TransformedAtom&, const TransformedAtom&) = default;
};

struct InvertedAtom {
  Rational coeff;
  TimeAtom atom;

  friend bool operator==(const InvertedAtom&, const InvertedAtom&) = default;
};

/// Forward table lookup for a normalized atom.
TransformedAtom transform_atom(const TimeAtom& atom);

ImageExpr transform_expr(const TimeExpr& expr);

/// Inverse table lookup: `coeff * image` is rewritten as `result.coeff *
/// result.atom`. Throws Error(kMalformedImage) when the image violates the
/// canonical invariants (offset < 1, zero rate on sin/sinh images).
InvertedAtom invert_atom(const Rational& coeff, const ImageAtom& image);

TimeExpr invert_expr(const ImageExpr& image);

/// The truncated carrier series
///   h(t) = sum_{k=1..n} F_k beta^(k-1) / (k-1)! * t^(k+1).
/// Throws Error(kEmptyMessage) for an empty message and
/// Error(kInvalidParams) for beta < 1.
TimeExpr expand_carrier_series(std::span<const std::uint8_t> message,
                               const BigInt& beta);

}  // namespace kaj
