#pragma once

#include "klrcell/quiver.hpp"
#include "klrcell/ratfun.hpp"
#include "klrcell/tableau.hpp"

#include <stdexcept>
#include <vector>

namespace klrcell {

// q_i = q^i when q != 1, i*1 in the degenerate case.
template <FieldScalar F>
F residue_value(const F& q, long long i) {
    if (q == q.from_int(1)) return q.from_int(i);
    return fpow(q, i);
}

// Content of a node over O, the four-case table; no parameter validation.
template <FieldScalar F>
RatFun<F> node_content(const Node& a, const Quiver& qv, const F& q) {
    bool degenerate = (q == q.from_int(1));
    long long shift = a.col - a.row;
    long long kl = qv.kappa()[a.comp - 1];
    auto x = RatFun<F>::from_poly(Poly<F>::monomial(q.from_int(1), 1));
    auto cq = RatFun<F>::constant(q);
    if (!degenerate && qv.e() > 0) return fpow(x + cq, shift + kl);
    if (!degenerate)
        return RatFun<F>::constant(fpow(q, shift)) *
               (fpow(x, a.comp) + RatFun<F>::constant(fpow(q, kl)));
    if (qv.e() > 0) return RatFun<F>::constant(q.from_int(shift + kl));
    return RatFun<F>::constant(q.from_int(shift + kl)) +
           RatFun<F>::constant(q.from_int(a.comp)) * x;
}

// Residue of a node in K: q^{c-r+kappa_l}, or the integer itself when q = 1.
// Always the specialization of node_content at x = 0.
template <FieldScalar F>
F node_residue_value(const Node& a, const Quiver& qv, const F& q) {
    return residue_value(q, a.col - a.row + qv.kappa()[a.comp - 1]);
}

// The modular system (K[x] localized at x, residue field K): lifted
// cyclotomic parameters Q^O, the unit v, node contents. The degenerate arm
// with e > 0 would need a p-adic base ring and is rejected; the degenerate
// e = 0 arm is supported.
template <FieldScalar F>
struct LiftParams {
    Quiver quiver;
    F q;                      // parameter of the residue field K
    bool degenerate;          // q == 1
    RatFun<F> v;              // x+q if q != 1 and e > 0, else the constant q
    std::vector<RatFun<F>> Q; // lifted cyclotomic parameters, one per component

    LiftParams(const Quiver& qv, const F& q_, int n) : quiver(qv), q(q_) {
        degenerate = (q == q.from_int(1));
        long long e = quiver.e();
        if (degenerate && e > 0)
            throw std::invalid_argument(
                "degenerate lift with e > 0 needs a p-adic base ring; unsupported");
        if (e != 0) {
            const auto& kappa = quiver.kappa();
            for (size_t s = 0; s + 1 < kappa.size(); ++s)
                if (kappa[s] - kappa[s + 1] < n)
                    throw std::invalid_argument(
                        "multicharge gap condition kappa_s - kappa_{s+1} >= n violated");
        }
        auto x = RatFun<F>::from_poly(Poly<F>::monomial(q.from_int(1), 1));
        auto cq = RatFun<F>::constant(q);
        v = (!degenerate && e > 0) ? x + cq : cq;
        for (int r = 1; r <= quiver.level(); ++r)
            Q.push_back(node_content(Node{1, 1, r}, quiver, q));
    }

    RatFun<F> content(const Node& a) const { return node_content(a, quiver, q); }
    F residue(const Node& a) const { return node_residue_value(a, quiver, q); }
};

template <FieldScalar F>
std::vector<RatFun<F>> content_seq(const Tableau& t, const LiftParams<F>& lp) {
    std::vector<RatFun<F>> out;
    out.reserve(t.size());
    for (int k = 1; k <= t.size(); ++k) out.push_back(lp.content(t.node_of(k)));
    return out;
}

namespace detail {

// Product over all rows of [len]!_v; at v = 1 this is a product of factorials.
template <FieldScalar F>
RatFun<F> row_poincare(const Multipartition& shape, const RatFun<F>& v) {
    RatFun<F> g = v.from_int(1);
    for (const auto& comp : shape.components())
        for (int len : comp)
            for (int j = 2; j <= len; ++j) {
                RatFun<F> term = v.from_int(1);
                RatFun<F> pw = v.from_int(1);
                for (int i = 1; i < j; ++i) {
                    pw = pw * v;
                    term = term + pw;
                }
                g = g * term;
            }
    return g;
}

// gamma_{t s_r} / gamma_t for t s_r standard one step up; contents taken in t.
template <FieldScalar F>
RatFun<F> gamma_step(const RatFun<F>& c, const RatFun<F>& c1, const LiftParams<F>& lp) {
    RatFun<F> d = c1 - c;
    if (d.is_zero()) throw std::logic_error("gamma: equal contents in a step");
    RatFun<F> dinv2 = d.inv() * d.inv();
    if (lp.degenerate) {
        auto one = d.from_int(1);
        return (d + one) * (d - one) * dinv2;
    }
    return (lp.v * c1 - c) * (c1 - lp.v * c) * dinv2;
}

// Accumulated step ratios along any length-decreasing path from t down to
// t^lambda; independent of the path taken.
template <FieldScalar F>
RatFun<F> step_product(const Tableau& t, const LiftParams<F>& lp, bool dual) {
    RatFun<F> g = lp.v.from_int(1);
    Tableau u = t;
    int len = u.d_perm().length();
    int n = t.size();
    while (len > 0) {
        bool stepped = false;
        for (int r = 1; r < n && !stepped; ++r) {
            Tableau w = u;
            try {
                w = u.act(Perm::transposition(n, r));
            } catch (const std::invalid_argument&) {
                continue;
            }
            if (w.d_perm().length() != len - 1) continue;
            Tableau wr = dual ? w.conjugate() : w;
            RatFun<F> step = gamma_step(lp.content(wr.node_of(r)),
                                        lp.content(wr.node_of(r + 1)), lp);
            if (dual && !lp.degenerate) step = step * lp.v.inv() * lp.v.inv();
            g = g * step;
            u = w;
            --len;
            stepped = true;
        }
        if (!stepped) throw std::logic_error("gamma: walk found no descent");
    }
    return g;
}

} // namespace detail

// gamma_t f_tt is idempotent: gamma is the eigenvalue of m_lambda on the
// initial seminormal vector (row Poincare polynomial times the u_lambda
// content factors), carried to t by one quadratic step ratio per letter of
// a reduced word for d(t).
template <FieldScalar F>
RatFun<F> gamma(const Tableau& t, const LiftParams<F>& lp) {
    const Multipartition& shape = t.shape();
    RatFun<F> g = detail::row_poincare(shape, lp.v);
    Tableau t0 = initial_tableau(shape);
    long long acc = 0;
    int ell = shape.level();
    for (int s = 2; s <= ell; ++s) {
        for (int len : shape.components()[s - 2]) acc += len;
        for (long long k = 1; k <= acc; ++k)
            g = g * (lp.content(t0.node_of(static_cast<int>(k))) - lp.Q[s - 1]);
    }
    return g * detail::step_product(t, lp, false);
}

// Dual version: eigenvalue of n_lambda (signed sum gives the Poincare
// polynomial at 1/v, u^- gives content factors at the conjugate tableau),
// with each step ratio taken at conjugate contents and scaled by v^{-2}.
template <FieldScalar F>
RatFun<F> gamma_prime(const Tableau& t, const LiftParams<F>& lp) {
    const Multipartition& shape = t.shape();
    RatFun<F> g = detail::row_poincare(shape, lp.v.inv());
    Tableau t0c = initial_tableau(shape).conjugate();
    int ell = shape.level();
    for (int s = 1; s <= ell - 1; ++s) {
        long long bound = 0;
        for (int c = 1; c <= ell - s; ++c)
            for (int len : shape.components()[c - 1]) bound += len;
        for (long long k = 1; k <= bound; ++k)
            g = g * (lp.content(t0c.node_of(static_cast<int>(k))) - lp.Q[s - 1]);
    }
    return g * detail::step_product(t, lp, true);
}

} // namespace klrcell
