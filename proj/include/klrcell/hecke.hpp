#pragma once

#include "klrcell/permutation.hpp"
#include "klrcell/poly.hpp"
#include "klrcell/ring.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace klrcell {

// Basis label for L^a T_w with 0 <= a_k < ell and w in Sym_n.
using HLabel = std::pair<std::vector<int>, Perm>;

template <FieldScalar F>
struct HElem {
    std::map<HLabel, F> terms;

    bool is_zero() const { return terms.empty(); }

    void add_term(const HLabel& lab, const F& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.emplace(lab, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    void add_scaled(const HElem& o, const F& c) {
        if (c.is_zero()) return;
        for (const auto& [lab, v] : o.terms) add_term(lab, v * c);
    }

    HElem& operator+=(const HElem& o) {
        for (const auto& [lab, c] : o.terms) add_term(lab, c);
        return *this;
    }
    HElem& operator-=(const HElem& o) {
        for (const auto& [lab, c] : o.terms) add_term(lab, -c);
        return *this;
    }
    HElem operator+(const HElem& o) const {
        HElem r = *this;
        r += o;
        return r;
    }
    HElem operator-(const HElem& o) const {
        HElem r = *this;
        r -= o;
        return r;
    }
    HElem operator*(const F& c) const {
        HElem r;
        if (c.is_zero()) return r;
        for (const auto& [lab, v] : terms) r.add_term(lab, v * c);
        return r;
    }
    bool operator==(const HElem& o) const { return terms == o.terms; }
    bool operator!=(const HElem& o) const { return !(terms == o.terms); }

    F coeff(const HLabel& lab) const {
        auto it = terms.find(lab);
        return it == terms.end() ? F() : it->second;
    }

    std::string str() const {
        if (terms.empty()) return "0";
        std::string s;
        for (const auto& [lab, c] : terms) {
            if (!s.empty()) s += " + ";
            s += c.str() + "*L(";
            for (size_t k = 0; k < lab.first.size(); ++k)
                s += (k ? "," : "") + std::to_string(lab.first[k]);
            s += ")T" + lab.second.str();
        }
        return s;
    }
};

// Cyclotomic Hecke algebra of Sym_n with parameter q (invertible; q = 1 is
// the degenerate case) and cyclotomic parameters Q_1..Q_ell, on the basis
// {L^a T_w : 0 <= a_k < ell, w in Sym_n}.
//
// Products are straightened with precomputed expansions R_m of L_m^ell.
// R_1 is the cyclotomic relation prod_s (L_1 - Q_s) = 0 solved for L_1^ell.
// For m >= 2, writing T = T_{m-1}, A = L_{m-1}, B = L_m, P(X) = prod (X-Q_s)
// = sum p_j X^j and H_i(X) = sum_{j>=i} p_j X^{j-i}, commuting T through
// powers of A and collecting the B^ell T term gives
//   B^ell = [ T P(A) - W T + (q-1) sum_{i=1}^{ell-1} B^i H_i(A)
//             + d_{q,1} sum_{i=1}^{ell} B^{i-1} H_i(A) ] q^{-1} T
// with W = sum_{j<ell} p_j B^j, valid for q = 1 as well since then
// (T - q + 1)^{-1} = T = q^{-1} T.
template <FieldScalar F>
class Hecke {
public:
    Hecke(int n, F q, std::vector<F> charge)
        : n_(n), q_(std::move(q)), Q_(std::move(charge)) {
        if (n_ < 1) throw std::invalid_argument("hecke: n must be positive");
        if (Q_.empty()) throw std::invalid_argument("hecke: empty charge");
        if (q_.is_zero()) throw std::invalid_argument("hecke: q must be invertible");
        ell_ = static_cast<int>(Q_.size());
        one_ = q_.from_int(1);
        deg_ = (q_ == one_);
        Poly<F> cyc = Poly<F>::constant(one_);
        for (const F& Qs : Q_)
            cyc = cyc * (Poly<F>::monomial(one_, 1) + Poly<F>::constant(-Qs));
        p_ = cyc.c;  // monic, so the size is exactly ell + 1
        build_straightening();
    }

    int n() const { return n_; }
    int level() const { return ell_; }
    const F& q() const { return q_; }
    const std::vector<F>& charge() const { return Q_; }
    bool degenerate() const { return deg_; }

    long long dim() const {
        long long d = 1;
        for (int k = 1; k <= n_; ++k) d *= ell_ * static_cast<long long>(k);
        return d;
    }

    HElem<F> zero() const { return {}; }
    HElem<F> one() const { return scalar(one_); }
    HElem<F> scalar(const F& c) const {
        HElem<F> e;
        e.add_term({std::vector<int>(n_, 0), Perm(n_)}, c);
        return e;
    }
    HElem<F> T(int r) const {
        if (r < 1 || r >= n_) throw std::invalid_argument("hecke: T index");
        HElem<F> e;
        e.add_term({std::vector<int>(n_, 0), Perm::transposition(n_, r)}, one_);
        return e;
    }
    HElem<F> T_perm(const Perm& w) const {
        HElem<F> e;
        e.add_term({std::vector<int>(n_, 0), w}, one_);
        return e;
    }
    HElem<F> L(int k) const {
        if (k < 1 || k > n_) throw std::invalid_argument("hecke: L index");
        std::vector<int> a(n_, 0);
        a[k - 1] = 1;
        return monomial(a, Perm(n_));
    }
    // c L^a T_w for arbitrary exponents, reduced.
    HElem<F> monomial(const std::vector<int>& a, const Perm& w) const {
        HElem<F> e;
        insert_reduced(e, a, w, one_);
        return e;
    }

    // x T_r
    HElem<F> mul_T(const HElem<F>& x, int r) const {
        HElem<F> out;
        Perm sr = Perm::transposition(n_, r);
        for (const auto& [lab, c] : x.terms) {
            Perm wsr = lab.second * sr;
            if (right_ascent(lab.second, r)) {
                out.add_term({lab.first, wsr}, c);
            } else {
                out.add_term({lab.first, lab.second}, c * (q_ - one_));
                out.add_term({lab.first, wsr}, c * q_);
            }
        }
        return out;
    }

    // x L_k: commute L_k leftward through each T_w, then bump the exponent.
    // The walk carries buckets keyed by the pending L index (0 = none, from
    // the degenerate delta terms), each with a pure-T tail.
    HElem<F> mul_L(const HElem<F>& x, int k) const {
        if (k < 1 || k > n_) throw std::invalid_argument("hecke: L index");
        HElem<F> out;
        F qm1 = q_ - one_;
        for (const auto& [lab, c] : x.terms) {
            std::map<int, std::map<Perm, F>> buck;
            buck[k][Perm(n_)] = c;
            std::vector<int> word = lab.second.word();
            for (auto it = word.rbegin(); it != word.rend(); ++it) {
                int r = *it;
                std::map<int, std::map<Perm, F>> nxt;
                for (auto& [i, tail] : buck) {
                    if (i == r) {
                        // T_r L_r = L_{r+1} T_r - (q-1) L_{r+1} - d_{q,1}
                        tail_add(nxt[r + 1], coxeter_lmul(r, tail), one_);
                        tail_add(nxt[r + 1], tail, -qm1);
                        if (deg_) tail_add(nxt[0], tail, -one_);
                    } else if (i == r + 1) {
                        // T_r L_{r+1} = L_r T_r + (q-1) L_{r+1} + d_{q,1}
                        tail_add(nxt[r], coxeter_lmul(r, tail), one_);
                        tail_add(nxt[r + 1], tail, qm1);
                        if (deg_) tail_add(nxt[0], tail, one_);
                    } else {
                        tail_add(nxt[i], coxeter_lmul(r, tail), one_);
                    }
                }
                buck.swap(nxt);
            }
            for (const auto& [i, tail] : buck)
                for (const auto& [v, cv] : tail) {
                    std::vector<int> a = lab.first;
                    if (i > 0) ++a[i - 1];
                    insert_reduced(out, a, v, cv);
                }
        }
        return out;
    }

    // T_r x by the divided-difference rule
    //   T_r L^a = L^{s_r a} T_r - ((q-1) L_{r+1} + d_{q,1}) D_r(L^a),
    // D_r(L^a) = (L^a - L^{s_r a}) / (L_r - L_{r+1}). No exponent overflows:
    // every monomial of L_{r+1} D_r(L^a) has exponents <= max(a_r, a_{r+1}).
    HElem<F> lmul_T(int r, const HElem<F>& x) const {
        if (r < 1 || r >= n_) throw std::invalid_argument("hecke: T index");
        HElem<F> out;
        F qm1 = q_ - one_;
        Perm sr = Perm::transposition(n_, r);
        for (const auto& [lab, c] : x.terms) {
            std::vector<int> sa = lab.first;
            std::swap(sa[r - 1], sa[r]);
            Perm srw = sr * lab.second;
            if (left_ascent(lab.second, r)) {
                out.add_term({sa, srw}, c);
            } else {
                out.add_term({sa, lab.second}, c * qm1);
                out.add_term({sa, srw}, c * q_);
            }
            int ar = lab.first[r - 1], ar1 = lab.first[r];
            if (ar == ar1) continue;
            F sgn = (ar > ar1) ? one_ : -one_;
            int m = std::min(ar, ar1), d = std::abs(ar - ar1);
            for (int i = 0; i < d; ++i) {
                std::vector<int> b = lab.first;
                b[r - 1] = m + i;
                b[r] = m + d - 1 - i;
                if (!deg_) {
                    std::vector<int> bq = b;
                    ++bq[r];
                    out.add_term({bq, lab.second}, -c * sgn * qm1);
                } else {
                    out.add_term({b, lab.second}, -c * sgn);
                }
            }
        }
        return out;
    }

    // L_k x: the L's commute, so only the exponent moves.
    HElem<F> lmul_L(int k, const HElem<F>& x) const {
        if (k < 1 || k > n_) throw std::invalid_argument("hecke: L index");
        HElem<F> out;
        for (const auto& [lab, c] : x.terms) {
            std::vector<int> a = lab.first;
            ++a[k - 1];
            insert_reduced(out, a, lab.second, c);
        }
        return out;
    }

    HElem<F> mul(const HElem<F>& x, const HElem<F>& y) const {
        HElem<F> out;
        for (const auto& [lab, c] : y.terms) {
            HElem<F> cur = x;
            for (int k = 1; k <= n_; ++k)
                for (int t = 0; t < lab.first[k - 1]; ++t) cur = mul_L(cur, k);
            for (int r : lab.second.word()) cur = mul_T(cur, r);
            out.add_scaled(cur, c);
        }
        return out;
    }

    // The anti-automorphism fixing every T_r and L_k: (L^a T_w)* = T_{w^-1} L^a.
    HElem<F> star(const HElem<F>& x) const {
        HElem<F> out;
        for (const auto& [lab, c] : x.terms) {
            HElem<F> e;
            e.add_term({lab.first, Perm(n_)}, c);
            for (int r : lab.second.word()) e = lmul_T(r, e);
            out += e;
        }
        return out;
    }

    // Trace form: coefficient of the identity label (q != 1) or of
    // L_1^{ell-1} ... L_n^{ell-1} (q = 1) in the basis expansion.
    F tau(const HElem<F>& x) const {
        std::vector<int> a(n_, deg_ ? ell_ - 1 : 0);
        return x.coeff({a, Perm(n_)});
    }

    const std::vector<HLabel>& basis() const {
        if (basis_.empty()) {
            const auto& G = sym_group(n_);
            std::vector<int> a(n_, 0);
            while (true) {
                for (const Perm& w : G) basis_.push_back({a, w});
                int k = 0;
                while (k < n_ && ++a[k] == ell_) a[k++] = 0;
                if (k == n_) break;
            }
            for (size_t i = 0; i < basis_.size(); ++i) index_[basis_[i]] = i;
        }
        return basis_;
    }

    size_t basis_index(const HLabel& lab) const {
        basis();
        return index_.at(lab);
    }

    std::vector<F> coords(const HElem<F>& x) const {
        std::vector<F> v(basis().size(), q_.from_int(0));
        for (const auto& [lab, c] : x.terms) v[index_.at(lab)] = c;
        return v;
    }

    // Semisimple iff [k]_q != 0 for 2 <= k <= n and q^d Q_r != Q_s
    // (d + Q_r != Q_s when q = 1) for all r < s, |d| < n.
    bool is_semisimple() const {
        for (long long k = 2; k <= n_; ++k)
            if (quantum_integer(q_, k).is_zero()) return false;
        for (int r = 0; r < ell_; ++r)
            for (int s = r + 1; s < ell_; ++s)
                for (long long d = -(n_ - 1); d <= n_ - 1; ++d) {
                    F val = deg_ ? q_.from_int(d) + Q_[r] - Q_[s]
                                 : fpow(q_, d) * Q_[r] - Q_[s];
                    if (val.is_zero()) return false;
                }
        return true;
    }

    static bool left_ascent(const Perm& w, int r) { return w(r) < w(r + 1); }
    static bool right_ascent(const Perm& w, int r) {
        int pr = 0, pr1 = 0;
        for (int k = 1; k <= w.n(); ++k) {
            if (w(k) == r) pr = k;
            if (w(k) == r + 1) pr1 = k;
        }
        return pr < pr1;
    }

private:
    int n_, ell_ = 0;
    F q_, one_;
    bool deg_ = false;
    std::vector<F> Q_, p_;
    std::vector<HElem<F>> R_;  // R_[m-1] = reduced expansion of L_m^ell
    mutable std::vector<HLabel> basis_;
    mutable std::map<HLabel, size_t> index_;

    static void tail_add(std::map<Perm, F>& dst, const std::map<Perm, F>& src,
                         const F& c) {
        if (c.is_zero()) return;
        for (const auto& [w, v] : src) {
            F add = v * c;
            if (add.is_zero()) continue;
            auto [it, fresh] = dst.emplace(w, add);
            if (!fresh) {
                it->second = it->second + add;
                if (it->second.is_zero()) dst.erase(it);
            }
        }
    }

    std::map<Perm, F> coxeter_lmul(int r, const std::map<Perm, F>& tail) const {
        std::map<Perm, F> out;
        Perm sr = Perm::transposition(n_, r);
        for (const auto& [v, c] : tail) {
            if (left_ascent(v, r)) {
                tail_add(out, {{sr * v, c}}, one_);
            } else {
                tail_add(out, {{v, c * (q_ - one_)}}, one_);
                tail_add(out, {{sr * v, c * q_}}, one_);
            }
        }
        return out;
    }

    // Push c L^a T_w, substituting R_m at the largest index with a_m >= ell.
    // Each substitution lowers the profile (a_n, ..., a_1) lexicographically,
    // so the recursion terminates for arbitrary exponents.
    void insert_reduced(HElem<F>& acc, const std::vector<int>& a, const Perm& w,
                        const F& c) const {
        if (c.is_zero()) return;
        int m = 0;
        for (int k = n_; k >= 1; --k)
            if (a[k - 1] >= ell_) {
                m = k;
                break;
            }
        if (m == 0) {
            acc.add_term({a, w}, c);
            return;
        }
        std::vector<int> rest = a;
        rest[m - 1] -= ell_;
        std::vector<int> word = w.word();
        for (const auto& [lab, cb] : R_[m - 1].terms) {
            std::vector<int> merged = rest;
            for (int k = 0; k < n_; ++k) merged[k] += lab.first[k];
            std::map<Perm, F> tail{{lab.second, cb * c}};
            for (int r : word) {
                std::map<Perm, F> nxt;
                Perm sr = Perm::transposition(n_, r);
                for (const auto& [v, cv] : tail) {
                    if (right_ascent(v, r)) {
                        tail_add(nxt, {{v * sr, cv}}, one_);
                    } else {
                        tail_add(nxt, {{v, cv * (q_ - one_)}}, one_);
                        tail_add(nxt, {{v * sr, cv * q_}}, one_);
                    }
                }
                tail.swap(nxt);
            }
            for (const auto& [v, cv] : tail) insert_reduced(acc, merged, v, cv);
        }
    }

    void build_straightening() {
        R_.assign(n_, HElem<F>{});
        Perm id(n_);
        for (int j = 0; j < ell_; ++j) {
            std::vector<int> a(n_, 0);
            a[0] = j;
            R_[0].add_term({a, id}, -p_[j]);
        }
        F qm1 = q_ - one_;
        for (int m = 2; m <= n_; ++m) {
            HElem<F> pa = one();
            for (int s = 0; s < ell_; ++s) {
                HElem<F> next = lmul_L(m - 1, pa);
                next.add_scaled(pa, -Q_[s]);
                pa = next;
            }
            HElem<F> bracket = lmul_T(m - 1, pa);
            Perm sm = Perm::transposition(n_, m - 1);
            for (int j = 0; j < ell_; ++j) {
                std::vector<int> a(n_, 0);
                a[m - 1] = j;
                bracket.add_term({a, sm}, -p_[j]);
            }
            if (!deg_) {
                for (int i = 1; i <= ell_ - 1; ++i)
                    for (int j = i; j <= ell_; ++j) {
                        std::vector<int> a(n_, 0);
                        a[m - 1] = i;
                        a[m - 2] = j - i;
                        bracket.add_term({a, id}, qm1 * p_[j]);
                    }
            } else {
                for (int i = 1; i <= ell_; ++i)
                    for (int j = i; j <= ell_; ++j) {
                        std::vector<int> a(n_, 0);
                        a[m - 1] = i - 1;
                        a[m - 2] = j - i;
                        bracket.add_term({a, id}, p_[j]);
                    }
            }
            R_[m - 1] = mul_T(bracket, m - 1) * q_.inv();
        }
    }
};

}  // namespace klrcell
