#pragma once

#include <cstdint>
#include <string>
#include <tuple>

#include "sgring/error.hpp"

namespace sgring {

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r))
    throw ArithmeticOverflow("integer overflow in " + std::to_string(a) +
                             " + " + std::to_string(b));
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r))
    throw ArithmeticOverflow("integer overflow in " + std::to_string(a) +
                             " - " + std::to_string(b));
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r))
    throw ArithmeticOverflow("integer overflow in " + std::to_string(a) +
                             " * " + std::to_string(b));
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

inline Int abs(Int a) { return a < 0 ? neg(a) : a; }

} // namespace checked

inline Int gcd(Int a, Int b) {
  a = checked::abs(a);
  b = checked::abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Euclidean remainder, always in [0, |m|).
inline Int floor_mod(Int a, Int m) {
  Int r = a % m;
  if (r < 0)
    r += (m < 0 ? -m : m);
  return r;
}

inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

inline Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

/// Returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
inline std::tuple<Int, Int, Int> extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    std::tie(old_r, r) = std::make_tuple(r, checked::sub(old_r, checked::mul(q, r)));
    std::tie(old_s, s) = std::make_tuple(s, checked::sub(old_s, checked::mul(q, s)));
    std::tie(old_t, t) = std::make_tuple(t, checked::sub(old_t, checked::mul(q, t)));
  }
  if (old_r < 0)
    return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

} // namespace sgring
