#pragma once
#include <cstdint>
#include <map>
#include <string>

namespace klrcell {

// Laurent polynomial in t with integer coefficients; map holds no zero entries.
struct Laurent {
  std::map<long long, long long> c;

  Laurent() = default;
  static Laurent term(long long coeff, long long deg) {
    Laurent r;
    if (coeff) r.c[deg] = coeff;
    return r;
  }
  static Laurent one() { return term(1, 0); }

  bool is_zero() const { return c.empty(); }

  void add(long long coeff, long long deg) {
    if (!coeff) return;
    auto it = c.find(deg);
    if (it == c.end()) {
      c[deg] = coeff;
    } else {
      it->second += coeff;
      if (it->second == 0) c.erase(it);
    }
  }

  friend Laurent operator+(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (auto& [d, k] : b.c) r.add(k, d);
    return r;
  }
  friend Laurent operator-(const Laurent& a, const Laurent& b) {
    Laurent r = a;
    for (auto& [d, k] : b.c) r.add(-k, d);
    return r;
  }
  friend Laurent operator*(const Laurent& a, const Laurent& b) {
    Laurent r;
    for (auto& [da, ka] : a.c)
      for (auto& [db, kb] : b.c) r.add(ka * kb, da + db);
    return r;
  }
  friend bool operator==(const Laurent& a, const Laurent& b) { return a.c == b.c; }
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

  long long coeff(long long deg) const {
    auto it = c.find(deg);
    return it == c.end() ? 0 : it->second;
  }

  long long eval_at_one() const {
    long long s = 0;
    for (auto& [d, k] : c) {
      (void)d;
      s += k;
    }
    return s;
  }

  // bar involution t -> t^{-1}
  Laurent bar() const {
    Laurent r;
    for (auto& [d, k] : c) r.c[-d] = k;
    return r;
  }

  bool bar_invariant() const { return *this == bar(); }

  std::string str() const {
    if (c.empty()) return "0";
    std::string out;
    for (auto& [d, k] : c) {
      if (!out.empty()) out += k >= 0 ? " + " : " - ";
      else if (k < 0) out += "-";
      long long a = k >= 0 ? k : -k;
      if (a != 1 || d == 0) out += std::to_string(a);
      if (d != 0) {
        if (a != 1) out += "*";
        out += "t";
        if (d != 1) out += "^" + std::to_string(d);
      }
    }
    return out;
  }
};

}  // namespace klrcell
