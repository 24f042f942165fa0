#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>

#include "klrcell/poly.hpp"

namespace klrcell {

// Rational function num/den over F in one variable x. Normal form: den monic,
// gcd(num, den) = 1. Zero is {num = 0, den = 0-polys} in the context-free
// state or {0, 1} once context is known; both compare equal to zero.
// Doubles as the coefficient field K = F(x) and, through valuation_at_zero and
// specialize_at_zero, as the local ring of functions regular at x = 0.
template <FieldScalar F>
struct RatFun {
  Poly<F> num, den;

  RatFun() = default;
  static RatFun from_poly(Poly<F> p) {
    RatFun r;
    r.num = std::move(p);
    if (!r.num.is_zero()) r.den = Poly<F>::constant(r.num.leading().from_int(1));
    r.reduce();
    return r;
  }
  static RatFun constant(const F& a) { return from_poly(Poly<F>::constant(a)); }
  static RatFun of(Poly<F> n, Poly<F> d) {
    RatFun r;
    r.num = std::move(n);
    r.den = std::move(d);
    r.reduce();
    return r;
  }

  bool is_zero() const { return num.is_zero(); }
  bool is_polynomial() const { return num.is_zero() || den.degree() == 0; }

  void reduce() {
    if (num.is_zero()) {
      if (!den.is_zero()) den = Poly<F>::constant(den.leading().from_int(1));
      return;
    }
    if (den.is_zero()) throw std::domain_error("RatFun: zero denominator");
    Poly<F> g = gcd(num, den);
    if (g.degree() > 0) {
      num = divmod(num, g).first;
      den = divmod(den, g).first;
    }
    F lead = den.leading();
    if (!(lead == lead.from_int(1))) {
      F u = lead.inv();
      num = u * num;
      den = u * den;
    }
  }

  RatFun from_int(long long n) const {
    if (num.is_zero() && den.is_zero()) {
      if (n != 0) throw std::logic_error("RatFun: from_int on context-free zero");
      return RatFun{};
    }
    const F& proto = num.is_zero() ? den.leading() : num.leading();
    return constant(proto.from_int(n));
  }

  friend RatFun operator+(const RatFun& a, const RatFun& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    return of(a.num * b.den + b.num * a.den, a.den * b.den);
  }
  friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }
  RatFun operator-() const {
    RatFun r = *this;
    r.num = -r.num;
    return r;
  }
  friend RatFun operator*(const RatFun& a, const RatFun& b) {
    if (a.is_zero() || b.is_zero()) return RatFun{};
    return of(a.num * b.num, a.den * b.den);
  }
  RatFun inv() const {
    if (is_zero()) throw std::domain_error("RatFun: inverse of zero");
    RatFun r;
    r.num = den;
    r.den = num;
    r.reduce();
    return r;
  }

  friend bool operator==(const RatFun& a, const RatFun& b) {
    if (a.is_zero() && b.is_zero()) return true;
    return a.num == b.num && a.den == b.den;
  }
  friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

  // order of vanishing at x = 0 (negative at a pole); sentinel for 0
  long long valuation_at_zero() const {
    if (is_zero()) return static_cast<long long>(1) << 60;
    return num.valuation() - den.valuation();
  }

  // value at x = 0; requires valuation >= 0
  F specialize_at_zero() const {
    if (is_zero()) return F{};
    long long vd = den.valuation();
    if (num.valuation() < vd) throw std::domain_error("RatFun: pole at x = 0");
    F d0 = den.c[static_cast<std::size_t>(vd)];
    F n0 = static_cast<long long>(num.c.size()) > vd ? num.c[static_cast<std::size_t>(vd)]
                                                     : d0.from_int(0);
    return n0 * d0.inv();
  }

  std::string str() const {
    if (is_zero()) return "0";
    if (den.degree() == 0) return num.str();
    return "(" + num.str() + ")/(" + den.str() + ")";
  }
};

// In K = F(x) only constants can have a finite quantum characteristic; a
// non-constant q has infinite multiplicative order, so e = 0.
template <FieldScalar F>
long long quantum_characteristic(const RatFun<F>& q) {
  if (q.is_zero()) throw std::invalid_argument("quantum characteristic: q = 0");
  if (q.is_polynomial() && q.num.degree() == 0) return quantum_characteristic(q.num.c[0]);
  return 0;
}

}  // namespace klrcell
