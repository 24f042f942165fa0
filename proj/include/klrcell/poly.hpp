#pragma once
#include <cassert>
#include <string>
#include <tuple>
#include <vector>

#include "klrcell/ring.hpp"

namespace klrcell {

// Dense polynomial over F. Invariant: no trailing zero coefficients, so the
// zero polynomial has an empty coefficient vector and degree -1.
template <FieldScalar F>
struct Poly {
  std::vector<F> c;

  Poly() = default;
  static Poly constant(const F& a) {
    Poly r;
    if (!a.is_zero()) r.c = {a};
    return r;
  }
  // coeff * x^k
  static Poly monomial(const F& coeff, int k) {
    Poly r;
    if (coeff.is_zero()) return r;
    r.c.assign(k + 1, coeff.from_int(0));
    r.c[k] = coeff;
    return r;
  }

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }

  void trim() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }

  const F& leading() const {
    assert(!c.empty());
    return c.back();
  }

  // lowest nonzero exponent; large sentinel for the zero polynomial
  long long valuation() const {
    for (std::size_t i = 0; i < c.size(); ++i)
      if (!c[i].is_zero()) return static_cast<long long>(i);
    return static_cast<long long>(1) << 60;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size());
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] + b.c[i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r = a;
    if (r.c.size() < b.c.size()) r.c.resize(b.c.size());
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
    r.trim();
    return r;
  }
  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c.assign(a.c.size() + b.c.size() - 1, a.leading().from_int(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
    }
    r.trim();
    return r;
  }
  friend Poly operator*(const F& s, const Poly& a) {
    Poly r;
    if (s.is_zero()) return r;
    r.c = a.c;
    for (auto& x : r.c) x = s * x;
    r.trim();
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
      if (!(a.c[i] == b.c[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  F eval(const F& x) const {
    F acc = x.from_int(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
    return acc;
  }

  Poly monic() const {
    assert(!is_zero());
    return leading().inv() * *this;
  }

  // quotient and remainder; b must be nonzero
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    assert(!b.is_zero());
    Poly q, r = a;
    F lbinv = b.leading().inv();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int k = r.degree() - b.degree();
      F coeff = r.leading() * lbinv;
      Poly t = Poly::monomial(coeff, k);
      q = q + t;
      r = r - t * b;
    }
    return {q, r};
  }

  friend Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      auto [q, r] = divmod(a, b);
      (void)q;
      a = b;
      b = r;
    }
    if (!a.is_zero()) a = a.monic();
    return a;
  }

  // monic g = s*a + t*b
  friend std::tuple<Poly, Poly, Poly> xgcd(Poly a, Poly b) {
    Poly s0 = Poly::constant(a.is_zero() ? (b.is_zero() ? F{} : b.leading().from_int(1))
                                         : a.leading().from_int(1));
    Poly s1, t0, t1 = s0;
    while (!b.is_zero()) {
      auto [q, r] = divmod(a, b);
      a = b;
      b = r;
      Poly ns = s0 - q * s1, nt = t0 - q * t1;
      s0 = s1;
      s1 = ns;
      t0 = t1;
      t1 = nt;
    }
    if (a.is_zero()) return {a, s0, t0};
    F u = a.leading().inv();
    return {u * a, u * s0, u * t0};
  }

  std::string str(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (c[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += c[i].str();
      if (i >= 1) out += "*" + var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }
};

}  // namespace klrcell
