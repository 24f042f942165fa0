#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace klrcell {

// Arbitrary-precision rational; context-free, so the default zero needs no care.
struct Rat {
  boost::multiprecision::cpp_rational v;

  Rat() = default;
  explicit Rat(long long n) : v(n) {}
  Rat(long long num, long long den) : v(num) { v /= den; }
  explicit Rat(boost::multiprecision::cpp_rational x) : v(std::move(x)) {}

  bool is_zero() const { return v == 0; }
  Rat from_int(long long n) const { return Rat(n); }

  friend Rat operator+(const Rat& a, const Rat& b) { return Rat(a.v + b.v); }
  friend Rat operator-(const Rat& a, const Rat& b) { return Rat(a.v - b.v); }
  friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.v * b.v); }
  Rat operator-() const { return Rat(-v); }
  Rat inv() const {
    if (v == 0) throw std::domain_error("Rat: inverse of zero");
    return Rat(1 / v);
  }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v == b.v; }
  friend bool operator!=(const Rat& a, const Rat& b) { return a.v != b.v; }
  friend bool operator<(const Rat& a, const Rat& b) { return a.v < b.v; }

  std::string str() const { return v.str(); }
};

// Over Q only q = -1 gives a finite quantum characteristic (e = 2).
// q = 1 (infinite) and q = 0 are rejected.
inline long long quantum_characteristic(const Rat& q) {
  if (q.is_zero()) throw std::invalid_argument("quantum characteristic: q = 0");
  if (q.v == 1) throw std::invalid_argument("quantum characteristic: q = 1 over Q");
  if (q.v == -1) return 2;
  return 0;
}

}  // namespace klrcell
