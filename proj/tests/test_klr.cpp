#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "klrcell/gfp.hpp"
#include "klrcell/klr.hpp"
#include "klrcell/linalg.hpp"
#include "klrcell/rational.hpp"
#include "klrcell/seminormal.hpp"
#include "test_util.hpp"

#include <vector>

using namespace klrcell;
using klrcell::testutil::make_tab;

namespace {

static GFp g5(long long v) { return GFp(v, 5); }
static GFp g7(long long v) { return GFp(v, 7); }

Multipartition mp(std::vector<std::vector<int>> c) {
    return Multipartition(std::move(c));
}

// All reduced words of w, first letter peeled on the left so that
// w = s_{r_1} * ... * s_{r_m} in the left-to-right product convention.
std::vector<std::vector<int>> all_reduced_words(const Perm& w) {
    if (w.length() == 0) return {{}};
    std::vector<std::vector<int>> out;
    int n = w.n();
    for (int r = 1; r < n; ++r) {
        Perm u = Perm::transposition(n, r) * w;
        if (u.length() != w.length() - 1) continue;
        for (auto tail : all_reduced_words(u)) {
            tail.insert(tail.begin(), r);
            out.push_back(std::move(tail));
        }
    }
    return out;
}

template <FieldScalar F>
void require_all_pass(const RelationReport& rep) {
    INFO(rep.str());
    CHECK(rep.all_pass());
    CHECK(!rep.checks.empty());
}

}  // namespace

TEST_CASE("klr frozen battery: n=2, e=2, GF(5), q=4") {
    Quiver qv(2, {0});
    KLR<GFp> k(qv, g5(4), 2);
    const auto& H = k.algebra();

    CHECK(k.support() == std::vector<std::vector<long long>>{{0, 1}});
    CHECK(k.e_idem({0, 1}) == H.one());
    CHECK(k.e_idem({1, 0}).is_zero());
    CHECK(k.e_idem({0, 0}).is_zero());

    CHECK(k.y(1).is_zero());
    HElem<GFp> y2 = H.T(1) * g5(2);
    y2 += H.scalar(g5(2));
    CHECK(k.y(2) == y2);
    CHECK(H.mul(k.y(2), k.y(2)).is_zero());
    CHECK(k.nilpotency_index(1) == 1);
    CHECK(k.nilpotency_index(2) == 2);

    require_all_pass<GFp>(k.check_relations());
    require_all_pass<GFp>(k.check_inverse_maps());

    // psi_1 vanishes here: T_1 + P_1(i) kills the whole weight space, and
    // the relation suite plus the inverse map T_1 = -P_1(i)e(i) stay
    // consistent with that.
    CHECK(k.psi(1).is_zero());
    // e(i) and y_r are polynomials in the commuting L_k, so the ungraded
    // star fixes them (it does not fix psi_r in general).
    CHECK(H.star(k.y(2)) == k.y(2));
    CHECK(H.star(k.e_idem({0, 1})) == k.e_idem({0, 1}));

    Multipartition row = mp({{2}}), col = mp({{1, 1}});
    CHECK(k.e_lambda_y_lambda(col) == H.one());
    CHECK(k.e_lambda_y_lambda(row) == k.y(2));
    CHECK(k.e_lambda_y_lambda(row) == m_lambda(H, row) * g5(2));

    Tableau trow = initial_tableau(row), tcol = initial_tableau(col);
    CHECK(k.psi_st(trow, trow) == k.y(2));
    CHECK(k.psi_st(tcol, tcol) == H.one());

    // z_2^{+,0} = 1 + T_1 = 3 e(0,1) y_2
    HElem<GFp> z = k.z_ns(0, +1);
    HElem<GFp> expect = H.one() + H.T(1);
    CHECK(z == expect);
    CHECK(z == H.mul(k.e_idem({0, 1}), k.y(2)) * g5(3));
    auto [C, pass] = k.verify_z_factorization(0, +1);
    CHECK(pass);
    CHECK(C == g5(3));
}

TEST_CASE("klr relation suite passes across configurations") {
    SUBCASE("n=3, e=3, GF(7), q=2") {
        KLR<GFp> k(Quiver(3, {0}), g7(2), 3);
        require_all_pass<GFp>(k.check_relations());
        require_all_pass<GFp>(k.check_inverse_maps());
    }
    SUBCASE("n=3, e=2, GF(5), q=4") {
        KLR<GFp> k(Quiver(2, {0}), g5(4), 3);
        require_all_pass<GFp>(k.check_relations());
        require_all_pass<GFp>(k.check_inverse_maps());
    }
    SUBCASE("n=3, e=4, GF(5), q=2") {
        KLR<GFp> k(Quiver(4, {0}), g5(2), 3);
        require_all_pass<GFp>(k.check_relations());
    }
    SUBCASE("n=2, e=3, GF(7), q=2, level 2") {
        KLR<GFp> k(Quiver(3, {2, 0}), g7(2), 2);
        require_all_pass<GFp>(k.check_relations());
        require_all_pass<GFp>(k.check_inverse_maps());
    }
    SUBCASE("n=3, e=0, rational, q=2") {
        KLR<Rat> k(Quiver(0, {0}), Rat(2), 3);
        require_all_pass<Rat>(k.check_relations());
        require_all_pass<Rat>(k.check_inverse_maps());
    }
    SUBCASE("n=3, e=0, rational, degenerate q=1") {
        KLR<Rat> k(Quiver(0, {0}), Rat(1), 3);
        CHECK(k.degenerate());
        require_all_pass<Rat>(k.check_relations());
        require_all_pass<Rat>(k.check_inverse_maps());
        CHECK_THROWS_AS(k.psi(1), std::logic_error);
    }
}

TEST_CASE("klr idempotents agree with the seminormal specialization") {
    SUBCASE("n=3, e=2, GF(5), level 1") {
        Quiver qv(2, {0});
        KLR<GFp> k(qv, g5(4), 3);
        Seminormal<GFp> S(LiftParams<GFp>(qv, g5(4), 3), 3);
        for (const auto& i : k.support())
            CHECK(k.e_idem(i) == S.specialize(S.e_lift(i)));
    }
    SUBCASE("n=2, e=3, GF(7), level 2") {
        Quiver qv(3, {2, 0});
        KLR<GFp> k(qv, g7(2), 2);
        Seminormal<GFp> S(LiftParams<GFp>(qv, g7(2), 2), 2);
        for (const auto& i : k.support())
            CHECK(k.e_idem(i) == S.specialize(S.e_lift(i)));
    }
}

TEST_CASE("klr P series matches the leading-term expansion") {
    Quiver qv(3, {0});
    KLR<GFp> k(qv, g7(2), 3);
    // equal residues: P = 1
    BiSeries<GFp> p_eq = k.P_series(1, {0, 0, 1});
    CHECK(p_eq.at(0, 0) == g7(1));
    for (int a = 0; a <= p_eq.cap; ++a)
        for (int b = 0; a + b <= p_eq.cap; ++b)
            if (a + b > 0) CHECK(p_eq.at(a, b).is_zero());
    // distinct residues: constant term (1-q)/(1-q^{i_r-i_{r+1}})
    BiSeries<GFp> p = k.P_series(1, {0, 1, 2});
    GFp q = g7(2);
    CHECK(p.at(0, 0) == (g7(1) - q) * (g7(1) - fpow(q, -1)).inv());
}

TEST_CASE("klr psi_st weight relation and star") {
    Quiver qv(3, {0});
    KLR<GFp> k(qv, g7(2), 3);
    const auto& H = k.algebra();
    for (const Multipartition& lam : multipartitions(3, 1)) {
        const auto& std_tabs = standard_tableaux(lam);
        for (const Tableau& s : std_tabs)
            for (const Tableau& t : std_tabs) {
                HElem<GFp> ps = k.psi_st(s, t);
                auto is = residue_sequence(s, qv);
                auto it = residue_sequence(t, qv);
                CHECK(H.mul(H.mul(k.e_idem(is), ps), k.e_idem(it)) == ps);
                for (const auto& j : k.support()) {
                    if (j != is) CHECK(H.mul(k.e_idem(j), ps).is_zero());
                    if (j != it) CHECK(H.mul(ps, k.e_idem(j)).is_zero());
                }
            }
    }
}

TEST_CASE("klr psi_prime_st weight relation uses conjugate residues") {
    Quiver qv(3, {0});
    KLR<GFp> k(qv, g7(2), 3);
    const auto& H = k.algebra();
    for (const Multipartition& lam : multipartitions(3, 1)) {
        const auto& std_tabs = standard_tableaux(lam);
        for (const Tableau& s : std_tabs)
            for (const Tableau& t : std_tabs) {
                HElem<GFp> ps = k.psi_prime_st(s, t);
                CHECK(!ps.is_zero());
                auto is = residue_sequence(s.conjugate(), qv);
                auto it = residue_sequence(t.conjugate(), qv);
                CHECK(H.mul(H.mul(k.e_idem(is), ps), k.e_idem(it)) == ps);
            }
    }
}

TEST_CASE("klr psi spans: every basis element expands in psi_st") {
    // The psi elements over all shapes form a basis; check count and rank.
    Quiver qv(2, {0});
    KLR<GFp> k(qv, g5(4), 3);
    const auto& H = k.algebra();
    std::vector<HElem<GFp>> elems;
    for (const Multipartition& lam : multipartitions(3, 1)) {
        const auto& std_tabs = standard_tableaux(lam);
        for (const Tableau& s : std_tabs)
            for (const Tableau& t : std_tabs) elems.push_back(k.psi_st(s, t));
    }
    int dim = static_cast<int>(H.dim());
    REQUIRE(static_cast<int>(elems.size()) == dim);
    Matrix<GFp> M = zero_matrix(dim, dim, g5(0));
    for (size_t c = 0; c < elems.size(); ++c) {
        auto col = H.coords(elems[c]);
        for (int r = 0; r < dim; ++r) M[r][c] = col[r];
    }
    CHECK(gauss_rank(M) == dim);
}

TEST_CASE("klr reduced-word dependence: error terms are dominance-higher") {
    // Alternate reduced words differing only by commutation moves give the
    // same element (far commutation is exact), so this needs coset words
    // admitting braid moves. Level 1 first reaches those at n=6; the
    // cheapest genuine case is level 3 at n=3, where d(t) = s_1 s_2 s_1 for
    // the reversed one-column tableau. The multicharge (0,1,0) puts the
    // residue pattern (i, i+1, i) on i^lambda, so the braid correction term
    // actually fires.
    Quiver qv(3, {0, 1, 0});
    int n = 3, ell = 3;
    KLR<GFp> k(qv, g7(2), n);
    const auto& H = k.algebra();

    // m-basis indexed by pairs, for exact coordinates of the difference
    std::vector<std::pair<Tableau, Tableau>> pairs;
    std::vector<HElem<GFp>> mbasis;
    for (const Multipartition& lam : multipartitions(n, ell)) {
        const auto& std_tabs = standard_tableaux(lam);
        HElem<GFp> mlam = m_lambda(H, lam);
        for (const Tableau& u : std_tabs)
            for (const Tableau& v : std_tabs) {
                pairs.emplace_back(u, v);
                mbasis.push_back(m_st(H, mlam, u, v));
            }
    }
    int dim = static_cast<int>(H.dim());
    REQUIRE(static_cast<int>(pairs.size()) == dim);
    Matrix<GFp> M = zero_matrix(dim, dim, g7(0));
    for (size_t c = 0; c < mbasis.size(); ++c) {
        auto col = H.coords(mbasis[c]);
        for (int r = 0; r < dim; ++r) M[r][c] = col[r];
    }

    int exercised = 0;
    for (const Multipartition& lam : multipartitions(n, ell)) {
        if (exercised >= 4) break;
        const auto& std_tabs = standard_tableaux(lam);
        for (const Tableau& s : std_tabs) {
            auto words_s = all_reduced_words(s.d_perm());
            if (words_s.size() < 2) continue;
            for (const Tableau& t : std_tabs) {
                HElem<GFp> base = k.psi_st(s, t);
                HElem<GFp> diff;
                for (const auto& ws : words_s) {
                    diff = k.psi_st(s, t, ws, t.d_word()) - base;
                    if (!diff.is_zero()) break;
                }
                if (diff.is_zero()) continue;
                ++exercised;
                Matrix<GFp> b = zero_matrix(dim, 1, g7(0));
                auto bc = H.coords(diff);
                for (int r = 0; r < dim; ++r) b[r][0] = bc[r];
                auto sol = solve_linear(M, b);
                REQUIRE(sol.has_value());
                for (size_t c = 0; c < pairs.size(); ++c) {
                    if ((*sol)[c][0].is_zero()) continue;
                    const auto& [u, v] = pairs[c];
                    INFO("term at u=", u.str(), " v=", v.str());
                    CHECK(pair_dominates(u, v, s, t));
                    CHECK(!(u == s && v == t));
                }
                if (exercised >= 4) break;
            }
            if (exercised >= 4) break;
        }
    }
    CHECK(exercised > 0);
}

TEST_CASE("klr one dimensional ideal generators") {
    SUBCASE("n=3, e=3, GF(7), level 1, both signs") {
        Quiver qv(3, {0});
        KLR<GFp> k(qv, g7(2), 3);
        const auto& H = k.algebra();
        for (int eps : {+1, -1}) {
            HElem<GFp> z = k.z_ns(0, eps);
            CHECK(!z.is_zero());
            auto [C, pass] = k.verify_z_factorization(0, eps);
            INFO("eps=", eps);
            CHECK(pass);
            CHECK(!C.is_zero());
            for (const Perm& w : sym_group(3)) {
                GFp ev = eps > 0 ? fpow(g7(2), w.length())
                                 : fpow(g7(-1), w.length());
                CHECK(H.mul(H.T_perm(w), z) == z * ev);
                CHECK(H.mul(z, H.T_perm(w)) == z * ev);
            }
            auto i = k.z_residues(0, eps);
            for (int r = 1; r <= 3; ++r)
                CHECK(H.lmul_L(r, z) == z * residue_value(g7(2), i[r - 1]));
        }
    }
    SUBCASE("n=2, e=3, GF(7), level 2") {
        Quiver qv(3, {2, 0});
        KLR<GFp> k(qv, g7(2), 2);
        for (long long s : {0LL, 2LL}) {
            auto [C, pass] = k.verify_z_factorization(s, +1);
            INFO("s=", s);
            CHECK(pass);
            CHECK(!C.is_zero());
        }
    }
}

TEST_CASE("klr z_lambda sits between its idempotents") {
    Quiver qv(3, {0});
    KLR<GFp> k(qv, g7(2), 3);
    const auto& H = k.algebra();
    for (const Multipartition& lam : multipartitions(3, 1)) {
        HElem<GFp> z = k.z_lambda_elem(lam);
        Multipartition lamc = lam.conjugate();
        HElem<GFp> el = k.e_idem(residue_sequence(initial_tableau(lam), qv));
        HElem<GFp> epr =
            k.e_idem(residue_sequence(initial_tableau(lamc).conjugate(), qv));
        CHECK(!z.is_zero());
        CHECK(H.mul(el, z) == z);
        CHECK(H.mul(z, epr) == z);
    }
}

TEST_CASE("klr graded embedding n=2 -> n=3") {
    Quiver qv(2, {0});
    KLR<GFp> k2(qv, g5(4), 2), k3(qv, g5(4), 3);
    require_all_pass<GFp>(check_graded_embedding(k2, k3));
    HElem<GFp> lhs = embed_elem(k2.e_idem({0, 1}), 3);
    HElem<GFp> rhs = k3.e_idem({0, 1, 0}) + k3.e_idem({0, 1, 1});
    CHECK(lhs == rhs);
    CHECK(embed_elem(k2.y(1), 3) == k3.y(1));
    CHECK(embed_elem(k2.psi(1), 3) == k3.psi(1));
}
