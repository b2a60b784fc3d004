#pragma once

// Rational Hilbert series N(t) / prod_i (1 - t^{a_i}) with a Laurent
// numerator, exact expansion, and limits at t = 1.

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "sgring/arith.hpp"

namespace sgring {

/// exponent -> coefficient; zero coefficients are never stored.
using LaurentPolynomial = std::map<Int, Int>;

inline void add_term(LaurentPolynomial &p, Int exponent, Int coefficient) {
  Int &c = p[exponent];
  c = checked::add(c, coefficient);
  if (c == 0)
    p.erase(exponent);
}

inline Int evaluate_at_one(const LaurentPolynomial &p) {
  Int s = 0;
  for (const auto &[e, c] : p)
    s = checked::add(s, c);
  return s;
}

/// Exact quotient p / (1 - t^a); throws when the division leaves a remainder.
inline LaurentPolynomial divide_by_one_minus(const LaurentPolynomial &p, Int a) {
  if (a <= 0)
    throw InvalidInput("denominator exponent must be positive");
  if (p.empty())
    return {};
  const Int lo = p.begin()->first;
  const Int hi = p.rbegin()->first;
  if (hi - lo < a)
    throw InvalidInput("numerator is not divisible by (1 - t^" +
                       std::to_string(a) + ")");
  const Int span = hi - lo - a; // degree of the quotient after shifting
  std::vector<Int> q(static_cast<std::size_t>(span + 1), 0);
  for (Int k = 0; k <= span; ++k) {
    auto it = p.find(lo + k);
    Int c = it == p.end() ? 0 : it->second;
    q[k] = k >= a ? checked::add(c, q[k - a]) : c;
  }
  LaurentPolynomial out;
  for (Int k = 0; k <= span; ++k)
    if (q[k] != 0)
      out[lo + k] = q[k];
  // (1 - t^a) * out must reproduce p.
  LaurentPolynomial back;
  for (const auto &[e, c] : out) {
    add_term(back, e, c);
    add_term(back, checked::add(e, a), checked::neg(c));
  }
  if (back != p)
    throw InvalidInput("numerator is not divisible by (1 - t^" +
                       std::to_string(a) + ")");
  return out;
}

struct HilbertSeries {
  LaurentPolynomial numerator;
  std::vector<Int> denominator; // factors (1 - t^a)

  friend bool operator==(const HilbertSeries &, const HilbertSeries &) = default;
};

/// Coefficients of t^lo .. t^hi of the power-series expansion.
inline std::vector<Int> series_expand(const HilbertSeries &s, Int lo, Int hi) {
  if (hi < lo)
    return {};
  const std::size_t n = static_cast<std::size_t>(hi - lo + 1);
  std::vector<Int> c(n, 0);
  for (const auto &[e, coef] : s.numerator)
    if (e >= lo && e <= hi)
      c[static_cast<std::size_t>(e - lo)] = coef;
  // Terms below lo still feed higher coefficients through the denominators.
  Int shift = lo;
  if (!s.numerator.empty() && s.numerator.begin()->first < lo) {
    shift = s.numerator.begin()->first;
    std::vector<Int> wide(static_cast<std::size_t>(hi - shift + 1), 0);
    for (const auto &[e, coef] : s.numerator)
      if (e <= hi)
        wide[static_cast<std::size_t>(e - shift)] = coef;
    c = std::move(wide);
  }
  for (Int a : s.denominator) {
    if (a <= 0)
      throw InvalidInput("denominator exponent must be positive");
    for (std::size_t k = static_cast<std::size_t>(a); k < c.size(); ++k)
      c[k] = checked::add(c[k], c[k - static_cast<std::size_t>(a)]);
  }
  return std::vector<Int>(c.begin() + (lo - shift), c.end());
}

/// Coefficients of t^0 .. t^N.
inline std::vector<Int> series_truncate(const HilbertSeries &s, Int n) {
  if (n < 0)
    throw InvalidInput("negative truncation order");
  return series_expand(s, 0, n);
}

/// Value at t = 1 of prod_{i < keep} (1 - t^{a_i}) * s, obtained by dividing
/// the numerator exactly by the remaining denominator factors.
inline Int limit_at_one(const HilbertSeries &s, std::size_t keep) {
  if (keep > s.denominator.size())
    throw InvalidInput("more factors kept than the denominator has");
  LaurentPolynomial p = s.numerator;
  for (std::size_t i = keep; i < s.denominator.size(); ++i)
    p = divide_by_one_minus(p, s.denominator[i]);
  return evaluate_at_one(p);
}

} // namespace sgring
