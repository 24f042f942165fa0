#pragma once
#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace klrcell {

// GF(p) element. p == 0 marks the context-free zero (v must then be 0).
// Nonzero values always know their prime; p < 2^31 so products fit in u64.
struct GFp {
  std::uint64_t v = 0;
  std::uint64_t p = 0;

  GFp() = default;
  GFp(long long val, std::uint64_t prime) : p(prime) {
    assert(prime > 1 && prime < (1ull << 31));
    long long m = val % static_cast<long long>(prime);
    if (m < 0) m += static_cast<long long>(prime);
    v = static_cast<std::uint64_t>(m);
  }

  bool is_zero() const { return v == 0; }

  GFp from_int(long long n) const {
    if (p == 0) {
      assert(n == 0);
      return GFp{};
    }
    return GFp(n, p);
  }

  friend std::uint64_t common_prime(const GFp& a, const GFp& b) {
    if (a.p == 0) return b.p;
    if (b.p == 0) return a.p;
    assert(a.p == b.p);
    return a.p;
  }

  friend GFp operator+(const GFp& a, const GFp& b) {
    std::uint64_t q = common_prime(a, b);
    if (q == 0) return GFp{};
    GFp r;
    r.p = q;
    r.v = a.v + b.v;
    if (r.v >= q) r.v -= q;
    return r;
  }
  friend GFp operator-(const GFp& a, const GFp& b) {
    std::uint64_t q = common_prime(a, b);
    if (q == 0) return GFp{};
    GFp r;
    r.p = q;
    r.v = a.v + q - b.v;
    if (r.v >= q) r.v -= q;
    return r;
  }
  friend GFp operator*(const GFp& a, const GFp& b) {
    std::uint64_t q = common_prime(a, b);
    if (q == 0 || a.v == 0 || b.v == 0) return a.v || b.v ? GFp(0, q) : GFp{};
    GFp r;
    r.p = q;
    r.v = a.v * b.v % q;
    return r;
  }
  GFp operator-() const {
    GFp r = *this;
    if (r.v) r.v = p - r.v;
    return r;
  }

  GFp inv() const {
    if (v == 0) throw std::domain_error("GFp: inverse of zero");
    // extended Euclid; p need not be prime as long as v is invertible
    long long a = static_cast<long long>(v), m = static_cast<long long>(p);
    long long x0 = 1, x1 = 0, r0 = a, r1 = m;
    while (r1) {
      long long quo = r0 / r1;
      long long t = r0 - quo * r1;
      r0 = r1;
      r1 = t;
      t = x0 - quo * x1;
      x0 = x1;
      x1 = t;
    }
    if (r0 != 1) throw std::domain_error("GFp: non-invertible element");
    return GFp(x0, p);
  }

  friend bool operator==(const GFp& a, const GFp& b) {
    if (a.v == 0 && b.v == 0) return true;
    return a.p == b.p && a.v == b.v;
  }
  friend bool operator!=(const GFp& a, const GFp& b) { return !(a == b); }

  std::string str() const { return std::to_string(v); }
};

// Quantum characteristic: least e >= 2 with 1 + q + ... + q^{e-1} = 0, else 0.
// In GF(p) it always exists: e = p for q = 1, otherwise the multiplicative
// order of q. Rejects q = 0.
inline long long quantum_characteristic(const GFp& q) {
  if (q.is_zero()) throw std::invalid_argument("quantum characteristic: q = 0");
  if (q.v == 1) return static_cast<long long>(q.p);
  long long ord = 1;
  GFp t = q;
  GFp one = q.from_int(1);
  while (!(t == one)) {
    t = t * q;
    ++ord;
    if (ord > static_cast<long long>(q.p)) throw std::logic_error("GFp: order overflow");
  }
  return ord;
}

}  // namespace klrcell
