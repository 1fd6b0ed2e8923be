// Generic ring helpers shared by the scalar types and the templated
// containers (series, matrices). Every coefficient ring used here is an
// ordinary value type with +,-,*, ==, is_zero() and a constructor from long.
#pragma once

#include <concepts>
#include <stdexcept>

namespace qsym {

template <class R>
concept Ring = requires(const R& a, const R& b) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  R(1L);
};

// Rings where every nonzero element has a multiplicative inverse.
template <class R>
concept FieldRing = Ring<R> && requires(const R& a) {
  { a.inverse() } -> std::convertible_to<R>;
};

// Rings with exact division (throws when the quotient does not exist).
template <class R>
concept ExactDivisionRing = Ring<R> && requires(const R& a, const R& b) {
  { a.exact_div(b) } -> std::convertible_to<R>;
};

template <Ring R>
R ring_pow(const R& base, int exp) {
  if (exp < 0) throw std::domain_error("ring_pow: negative exponent");
  R result(1L);
  R b = base;
  int e = exp;
  while (e > 0) {
    if (e & 1) result = result * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return result;
}

// [n]_c = 1 + c + ... + c^{n-1}, as a sum so that c = 1 needs no division.
template <Ring R>
R q_integer(int n, const R& c) {
  if (n < 0) throw std::domain_error("q_integer: negative n");
  R sum(0L);
  R pw(1L);
  for (int k = 0; k < n; ++k) {
    sum = sum + pw;
    if (k + 1 < n) pw = pw * c;
  }
  return sum;
}

// a / b in a field, or exact division in a division-checked ring.
template <class R>
R divide_exact(const R& a, const R& b) {
  if constexpr (FieldRing<R>) {
    return a * b.inverse();
  } else {
    static_assert(ExactDivisionRing<R>, "divide_exact: ring supports no division");
    return a.exact_div(b);
  }
}

}  // namespace qsym
