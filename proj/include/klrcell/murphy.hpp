#pragma once

#include "klrcell/hecke.hpp"
#include "klrcell/tableau.hpp"

#include <vector>

namespace klrcell {

// Content of a node in the coefficient field: q^{c-r} Q_l, additively
// c - r + Q_l when q = 1.
template <FieldScalar F>
F content_value(const Hecke<F>& H, const Node& a) {
    if (H.degenerate()) return H.q().from_int(a.col - a.row) + H.charge()[a.comp - 1];
    return fpow(H.q(), a.col - a.row) * H.charge()[a.comp - 1];
}

// Row lengths of the shape in component order: the blocks of the row
// stabilizer of the initial tableau.
inline std::vector<int> row_blocks(const Multipartition& shape) {
    std::vector<int> blocks;
    for (const auto& comp : shape.components())
        for (int len : comp) blocks.push_back(len);
    return blocks;
}

template <FieldScalar F>
HElem<F> sym_sum(const Hecke<F>& H, const Multipartition& shape) {
    HElem<F> s;
    for (const Perm& w : young_subgroup(H.n(), row_blocks(shape)))
        s += H.T_perm(w);
    return s;
}

template <FieldScalar F>
HElem<F> signed_sym_sum(const Hecke<F>& H, const Multipartition& shape) {
    HElem<F> s;
    F mq = -H.q();
    for (const Perm& w : young_subgroup(H.n(), row_blocks(shape)))
        s.add_scaled(H.T_perm(w), fpow(mq, -w.length()));
    return s;
}

// m_lambda = prod_{s=2}^{ell} prod_{k <= |l^(1)|+...+|l^(s-1)|} (L_k - Q_s)
//            * sum_{w in row stabilizer} T_w
template <FieldScalar F>
HElem<F> m_lambda(const Hecke<F>& H, const Multipartition& shape) {
    HElem<F> u = H.one();
    long long acc = 0;
    for (int s = 2; s <= H.level(); ++s) {
        for (int len : shape.components()[s - 2]) acc += len;
        for (long long k = 1; k <= acc; ++k) {
            HElem<F> next = H.mul_L(u, static_cast<int>(k));
            next.add_scaled(u, -H.charge()[s - 1]);
            u = next;
        }
    }
    return H.mul(u, sym_sum(H, shape));
}

// n_lambda = prod_{s=1}^{ell-1} prod_{k <= |l^(1)|+...+|l^(ell-s)|} (L_k - Q_s)
//            * sum_{w in row stabilizer} (-q)^{-len(w)} T_w
template <FieldScalar F>
HElem<F> n_lambda(const Hecke<F>& H, const Multipartition& shape) {
    HElem<F> u = H.one();
    int ell = H.level();
    for (int s = 1; s <= ell - 1; ++s) {
        long long bound = 0;
        for (int t = 1; t <= ell - s; ++t)
            for (int len : shape.components()[t - 1]) bound += len;
        for (long long k = 1; k <= bound; ++k) {
            HElem<F> next = H.mul_L(u, static_cast<int>(k));
            next.add_scaled(u, -H.charge()[s - 1]);
            u = next;
        }
    }
    return H.mul(u, signed_sym_sum(H, shape));
}

template <FieldScalar F>
HElem<F> m_st(const Hecke<F>& H, const HElem<F>& mlam, const Tableau& s,
              const Tableau& t) {
    HElem<F> e = H.mul(H.T_perm(s.d_perm().inverse()), mlam);
    return H.mul(e, H.T_perm(t.d_perm()));
}

template <FieldScalar F>
HElem<F> m_st(const Hecke<F>& H, const Tableau& s, const Tableau& t) {
    return m_st(H, m_lambda(H, s.shape()), s, t);
}

template <FieldScalar F>
HElem<F> n_st(const Hecke<F>& H, const HElem<F>& nlam, const Tableau& s,
              const Tableau& t) {
    HElem<F> e = H.mul(H.T_perm(s.d_perm().inverse()), nlam);
    e = H.mul(e, H.T_perm(t.d_perm()));
    return e * fpow(-H.q(), -(s.d_perm().length() + t.d_perm().length()));
}

template <FieldScalar F>
HElem<F> n_st(const Hecke<F>& H, const Tableau& s, const Tableau& t) {
    return n_st(H, n_lambda(H, s.shape()), s, t);
}

// z_lambda = m_lambda T_{w_lambda} n_{lambda'}
template <FieldScalar F>
HElem<F> z_lambda_elem(const Hecke<F>& H, const Multipartition& shape) {
    HElem<F> z = H.mul(m_lambda(H, shape), H.T_perm(w_lambda(shape)));
    return H.mul(z, n_lambda(H, shape.conjugate()));
}

}  // namespace klrcell
