#pragma once
#include <concepts>
#include <string>

namespace klrcell {

// Field elements are value types. Some fields need runtime context (the prime
// of GF(p)); a default-constructed element is the context-free zero, and
// arithmetic coerces it to the other operand's field. from_int(n) produces n*1
// in the same field as *this, so constants are always made from a value that
// already carries context.
template <class F>
concept FieldScalar = requires(const F a, const F b, long long n) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.inv() } -> std::convertible_to<F>;
  { a.from_int(n) } -> std::convertible_to<F>;
  { a.str() } -> std::convertible_to<std::string>;
};

template <class F>
F fpow(F base, long long e) {
  if (e < 0) {
    base = base.inv();
    e = -e;
  }
  F acc = base.from_int(1);
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

// [k]_q = 1 + q + ... + q^{k-1}, k >= 0.
template <class F>
F quantum_integer(const F& q, long long k) {
  F acc = q.from_int(0), p = q.from_int(1);
  for (long long i = 0; i < k; ++i) {
    acc = acc + p;
    p = p * q;
  }
  return acc;
}

}  // namespace klrcell
