#pragma once

// A proper countable coloring of the zero graph of x_1 - y_0 on pairs.
//
// (a, b) with a < b is colored by a rational strictly between a and b tagged
// "increasing", (a, b) with a > b by one strictly between b and a tagged
// "decreasing", and (a, a) by a distinguished zero token. Two pairs joined by
// an edge, (a, b) and (b, c), then always get different colors: equal tags
// force disjoint open intervals (a, b) and (b, c).

#include <compare>
#include <cstdint>
#include <utility>

#include "template_chroma/error.hpp"
#include "template_chroma/rational.hpp"

namespace template_chroma {

/// The rational with least denominator in the open interval (lo, hi), and
/// among those the least numerator. Found by Stern-Brocot descent, taking
/// runs of same-direction steps at once.
inline Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw Error(ErrorKind::InvalidArgument, "empty interval (" + lo.str() + ", " + hi.str() + ")");
  const auto n = lo.floor();
  if (Rational(n + 1) < hi) return Rational(n + 1);
  const auto x = lo - Rational(n);
  const auto y = hi - Rational(n);
  // Invariant: a/b <= x < y <= c/d with a/b and c/d Stern-Brocot neighbours.
  std::int64_t a = 0, b = 1, c = 1, d = 1;
  while (true) {
    const Rational mediant(a + c, b + d);
    if (mediant <= x) {
      auto t = ((x * Rational(b) - Rational(a)) / (Rational(c) - x * Rational(d))).floor();
      a += t * c;
      b += t * d;
    } else if (mediant >= y) {
      auto t = ((Rational(c) - y * Rational(d)) / (y * Rational(b) - Rational(a))).floor();
      c += t * a;
      d += t * b;
    } else {
      return Rational(n) + mediant;
    }
  }
}

struct ShiftColor {
  enum class Tag { Zero, Increasing, Decreasing };
  Tag tag = Tag::Zero;
  Rational value;

  friend bool operator==(const ShiftColor&, const ShiftColor&) = default;
};

inline ShiftColor shift_color(const Rational& first, const Rational& second) {
  if (first == second) return {ShiftColor::Tag::Zero, Rational(0)};
  if (first < second) return {ShiftColor::Tag::Increasing, simplest_between(first, second)};
  return {ShiftColor::Tag::Decreasing, simplest_between(second, first)};
}

}  // namespace template_chroma
