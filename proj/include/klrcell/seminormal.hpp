#pragma once

#include "klrcell/content.hpp"
#include "klrcell/hecke.hpp"
#include "klrcell/murphy.hpp"
#include "klrcell/tableau.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace klrcell {

// The lifted algebra H^O over the modular system (O = K[x] localized at x,
// residue field K): coefficients live in K(x), membership in O is a
// valuation check, reduction mod x is specialize_at_zero. Provides the
// seminormal idempotents F_t, both seminormal bases f_st and f'_st, the
// lifted residue idempotents e(i)^O and e(i')^O, and the positivity
// elements y_s^O and (y'_s)^O.
template <FieldScalar F>
class Seminormal {
public:
    using O = RatFun<F>;

    // H^O carries the lifted parameters: q lifts to the unit v and Q_l to
    // the content of (1,1,l), so L_k acts on the seminormal basis with
    // eigenvalue cont_t(k) = v^{col-row} Q_l.
    Seminormal(const LiftParams<F>& lp, int n)
        : lp_(lp), n_(n), H_(n, lp.v, lp.Q) {
        // Distinct contents cont_s(k) across every standard tableau of size
        // n. The lift separates contents, so each F_t below is well defined.
        const auto& all = all_standard_tableaux(n, lp_.quiver.level());
        contents_.assign(static_cast<size_t>(n) + 1, {});
        for (const Tableau& s : all)
            for (int k = 1; k <= n; ++k) {
                O c = lp_.content(s.node_of(k));
                auto& col = contents_[static_cast<size_t>(k)];
                bool seen = false;
                for (const O& d : col)
                    if (d == c) { seen = true; break; }
                if (!seen) col.push_back(c);
            }
    }

    const Hecke<O>& algebra() const { return H_; }
    const LiftParams<F>& lift() const { return lp_; }
    int n() const { return n_; }

    O content(const Tableau& t, int k) const { return lp_.content(t.node_of(k)); }

    // F_t = prod_k prod_{c != cont_t(k)} (L_k - c) / (cont_t(k) - c), the
    // product over the distinct contents at position k.
    const HElem<O>& F_idem(const Tableau& t) const {
        auto key = key_of(t);
        auto it = F_cache_.find(key);
        if (it != F_cache_.end()) return it->second;
        HElem<O> e = H_.one();
        for (int k = 1; k <= n_; ++k) {
            O ck = content(t, k);
            for (const O& c : contents_[static_cast<size_t>(k)]) {
                if (c == ck) continue;
                e = (H_.mul_L(e, k) - e * c) * (ck - c).inv();
            }
        }
        return F_cache_.emplace(std::move(key), std::move(e)).first->second;
    }

    // f_st = F_s m_st F_t and f'_st = F_{s'} n_st F_{t'}
    HElem<O> f_st(const Tableau& s, const Tableau& t) const {
        return H_.mul(H_.mul(F_idem(s), m_st(H_, m_lambda_cached(s.shape()), s, t)),
                      F_idem(t));
    }
    HElem<O> f_prime_st(const Tableau& s, const Tableau& t) const {
        return H_.mul(
            H_.mul(F_idem(s.conjugate()), n_st(H_, n_lambda_cached(s.shape()), s, t)),
            F_idem(t.conjugate()));
    }

    // e(i)^O = sum_{s in Std(i)} gamma_s^{-1} f_ss, and the dual expansion
    // e(i')^O = sum_{s in Std(i)} (gamma'_s)^{-1} f'_ss.
    HElem<O> e_lift(const std::vector<long long>& i) const {
        HElem<O> out;
        for (const Tableau& s : std_of_residue(i, lp_.quiver.level(), lp_.quiver))
            out.add_scaled(f_st(s, s), gamma(s, lp_).inv());
        return out;
    }
    HElem<O> e_prime_lift(const std::vector<long long>& i) const {
        HElem<O> out;
        for (const Tableau& s : std_of_residue(i, lp_.quiver.level(), lp_.quiver))
            out.add_scaled(f_prime_st(s, s), gamma_prime(s, lp_).inv());
        return out;
    }

    // y_s^O = prod_k prod_{alpha in Add_s(k)} (1 - cont(alpha)^{-1} L_k),
    // with factors (L_k - cont(alpha)) in the degenerate case; the product
    // runs over the residue-matching addable nodes below s^{-1}(k).
    HElem<O> y_lift(const Tableau& s) const {
        HElem<O> y = H_.one();
        for (int k = 1; k <= n_; ++k)
            for (const Node& a : node_sets(s, k, lp_.quiver).AddL)
                y = y_factor(std::move(y), k, lp_.content(a));
        return y;
    }
    // (y'_s)^O runs over the residue-matching addable nodes above the
    // entries of the conjugate tableau.
    HElem<O> y_prime_lift(const Tableau& s) const {
        Tableau sc = s.conjugate();
        HElem<O> y = H_.one();
        for (int k = 1; k <= n_; ++k)
            for (const Node& a : node_sets(sc, k, lp_.quiver).AddL_prime)
                y = y_factor(std::move(y), k, lp_.content(a));
        return y;
    }

    bool integral(const HElem<O>& x) const {
        for (const auto& [lab, c] : x.terms)
            if (c.valuation_at_zero() < 0) return false;
        return true;
    }
    // x -> 0 on every coefficient; throws on a pole
    HElem<F> specialize(const HElem<O>& x) const {
        HElem<F> out;
        for (const auto& [lab, c] : x.terms) out.add_term(lab, c.specialize_at_zero());
        return out;
    }

private:
    LiftParams<F> lp_;
    int n_;
    Hecke<O> H_;
    std::vector<std::vector<O>> contents_;  // contents_[k] = distinct cont_s(k)
    mutable std::map<std::vector<Node>, HElem<O>> F_cache_;
    mutable std::map<std::vector<std::vector<int>>, HElem<O>> m_cache_, n_cache_;

    static std::vector<Node> key_of(const Tableau& t) {
        std::vector<Node> key;
        key.reserve(static_cast<size_t>(t.size()));
        for (int k = 1; k <= t.size(); ++k) key.push_back(t.node_of(k));
        return key;
    }
    const HElem<O>& m_lambda_cached(const Multipartition& sh) const {
        auto it = m_cache_.find(sh.components());
        if (it != m_cache_.end()) return it->second;
        return m_cache_.emplace(sh.components(), m_lambda(H_, sh)).first->second;
    }
    const HElem<O>& n_lambda_cached(const Multipartition& sh) const {
        auto it = n_cache_.find(sh.components());
        if (it != n_cache_.end()) return it->second;
        return n_cache_.emplace(sh.components(), n_lambda(H_, sh)).first->second;
    }
    HElem<O> y_factor(HElem<O> y, int k, const O& c) const {
        if (lp_.degenerate) return H_.mul_L(y, k) - y * c;
        return y - H_.mul_L(y, k) * c.inv();
    }
};

}  // namespace klrcell
