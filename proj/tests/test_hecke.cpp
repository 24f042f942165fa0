#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "klrcell/gfp.hpp"
#include "klrcell/hecke.hpp"
#include "klrcell/linalg.hpp"
#include "klrcell/murphy.hpp"
#include "klrcell/rational.hpp"
#include "test_util.hpp"

#include <vector>

using namespace klrcell;

namespace {

template <FieldScalar F>
void check_defining_relations(const Hecke<F>& H) {
    const F one = H.q().from_int(1);
    const F qm1 = H.q() - one;
    const F delta = H.degenerate() ? one : H.q().from_int(0);
    int n = H.n();

    // quadratic (T_r + 1)(T_r - q) = 0
    for (int r = 1; r < n; ++r) {
        HElem<F> t = H.T(r);
        CHECK(H.mul(t + H.one(), t - H.scalar(H.q())).is_zero());
    }
    // braid and distant commutation
    for (int r = 1; r + 1 < n; ++r) {
        HElem<F> a = H.mul(H.mul(H.T(r), H.T(r + 1)), H.T(r));
        HElem<F> b = H.mul(H.mul(H.T(r + 1), H.T(r)), H.T(r + 1));
        CHECK(a == b);
    }
    for (int r = 1; r < n; ++r)
        for (int s = r + 2; s < n; ++s)
            CHECK(H.mul(H.T(r), H.T(s)) == H.mul(H.T(s), H.T(r)));
    // L's commute
    for (int r = 1; r <= n; ++r)
        for (int s = 1; s <= n; ++s)
            CHECK(H.mul(H.L(r), H.L(s)) == H.mul(H.L(s), H.L(r)));
    // cyclotomic relation
    HElem<F> cyc = H.one();
    for (const F& Qs : H.charge()) {
        HElem<F> f = H.L(1) - H.scalar(Qs);
        cyc = H.mul(cyc, f);
    }
    CHECK(cyc.is_zero());
    // T_r L_r + d_{q,1} = L_{r+1}(T_r - q + 1)
    for (int r = 1; r < n; ++r) {
        HElem<F> lhs = H.mul(H.T(r), H.L(r)) + H.scalar(delta);
        HElem<F> rhs = H.mul(H.L(r + 1), H.T(r) - H.scalar(qm1));
        CHECK(lhs == rhs);
    }
    // T_r L_s = L_s T_r for s != r, r+1
    for (int r = 1; r < n; ++r)
        for (int s = 1; s <= n; ++s) {
            if (s == r || s == r + 1) continue;
            CHECK(H.mul(H.T(r), H.L(s)) == H.mul(H.L(s), H.T(r)));
        }
    // L_{k+1} = q^{-1} T_k L_k T_k + d_{q,1} T_k
    for (int k = 1; k < n; ++k) {
        HElem<F> rhs =
            H.mul(H.mul(H.T(k), H.L(k)), H.T(k)) * H.q().inv() + H.T(k) * delta;
        CHECK(H.L(k + 1) == rhs);
    }
}

// lmul_T / lmul_L against the generic product, over every basis monomial.
// The two sides take disjoint code paths through the commutation engine.
template <FieldScalar F>
void check_left_mul(const Hecke<F>& H) {
    for (const HLabel& lab : H.basis()) {
        HElem<F> m = H.T_perm(lab.second);
        for (int k = 1; k <= H.n(); ++k)
            for (int t = 0; t < lab.first[k - 1]; ++t) m = H.lmul_L(k, m);
        for (int r = 1; r < H.n(); ++r)
            CHECK(H.lmul_T(r, m) == H.mul(H.T(r), m));
        for (int k = 1; k <= H.n(); ++k)
            CHECK(H.lmul_L(k, m) == H.mul(H.L(k), m));
    }
}

template <FieldScalar F>
void check_star_tau(const Hecke<F>& H, size_t stride) {
    const auto& B = H.basis();
    for (int r = 1; r < H.n(); ++r) CHECK(H.star(H.T(r)) == H.T(r));
    for (int k = 1; k <= H.n(); ++k) CHECK(H.star(H.L(k)) == H.L(k));
    for (const HLabel& lab : B) {
        HElem<F> m;
        m.add_term(lab, H.q().from_int(1));
        CHECK(H.star(H.star(m)) == m);
    }
    for (size_t i = 0; i < B.size(); i += stride)
        for (size_t j = 0; j < B.size(); j += stride) {
            HElem<F> a, b;
            a.add_term(B[i], H.q().from_int(1));
            b.add_term(B[j], H.q().from_int(1));
            HElem<F> ab = H.mul(a, b);
            CHECK(H.star(ab) == H.mul(H.star(b), H.star(a)));
            CHECK(H.tau(ab) == H.tau(H.mul(b, a)));
        }
}

// Express every m_st L_k (resp. n_st L_k) in the cellular basis and check
// the eigenvalue on the diagonal plus strict pair-dominance of the support.
template <FieldScalar F>
void check_cellular_action(const Hecke<F>& H, bool dual) {
    std::vector<Tableau> s_of, t_of;
    std::vector<HElem<F>> cell;
    for (const Multipartition& shape : multipartitions(H.n(), H.level())) {
        HElem<F> gen = dual ? n_lambda(H, shape) : m_lambda(H, shape);
        for (const Tableau& s : standard_tableaux(shape))
            for (const Tableau& t : standard_tableaux(shape)) {
                cell.push_back(dual ? n_st(H, gen, s, t) : m_st(H, gen, s, t));
                s_of.push_back(s);
                t_of.push_back(t);
            }
    }
    size_t d = H.basis().size();
    REQUIRE(cell.size() == d);
    Matrix<F> A = zero_matrix<F>(static_cast<int>(d), static_cast<int>(d), H.q());
    for (size_t j = 0; j < d; ++j) {
        auto v = H.coords(cell[j]);
        for (size_t i = 0; i < d; ++i) A[i][j] = v[i];
    }
    for (int k = 1; k <= H.n(); ++k) {
        Matrix<F> rhs = zero_matrix<F>(static_cast<int>(d), static_cast<int>(d), H.q());
        for (size_t j = 0; j < d; ++j) {
            auto v = H.coords(H.mul_L(cell[j], k));
            for (size_t i = 0; i < d; ++i) rhs[i][j] = v[i];
        }
        auto sol = solve_linear(A, rhs);
        REQUIRE(sol.has_value());  // the cellular elements form a basis
        for (size_t j = 0; j < d; ++j) {
            Tableau tj = dual ? t_of[j].conjugate() : t_of[j];
            F eigen = content_value(H, tj.node_of(k));
            CHECK((*sol)[j][j] == eigen);
            for (size_t i = 0; i < d; ++i) {
                if (i == j || (*sol)[i][j].is_zero()) continue;
                CHECK(pair_dominates(s_of[i], t_of[i], s_of[j], t_of[j]));
                CHECK(!(s_of[i] == s_of[j] && t_of[i] == t_of[j]));
            }
        }
    }
}

}  // namespace

using testutil::make_tab;

static GFp g5(long long v) { return GFp(v, 5); }
static GFp g7(long long v) { return GFp(v, 7); }
static Multipartition mp(std::vector<std::vector<int>> c) {
    return Multipartition(std::move(c));
}

TEST_CASE("defining relations across parameter families") {
    check_defining_relations(Hecke<GFp>(4, g5(4), {g5(1)}));
    check_defining_relations(Hecke<GFp>(3, g7(2), {g7(1), g7(4)}));
    check_defining_relations(Hecke<GFp>(3, g5(1), {g5(0), g5(3)}));
    check_defining_relations(Hecke<Rat>(3, Rat(2), {Rat(1)}));
    check_defining_relations(Hecke<Rat>(2, Rat(1), {Rat(0), Rat(1)}));
    check_defining_relations(Hecke<GFp>(2, g5(4), {g5(1), g5(2), g5(3)}));
}

TEST_CASE("left multiplication agrees with the generic product") {
    check_left_mul(Hecke<GFp>(3, g7(2), {g7(1), g7(4)}));
    check_left_mul(Hecke<GFp>(3, g5(4), {g5(1)}));
    check_left_mul(Hecke<GFp>(2, g5(1), {g5(0), g5(3)}));
    check_left_mul(Hecke<GFp>(2, g5(4), {g5(1), g5(2), g5(3)}));
}

TEST_CASE("associativity spot checks") {
    Hecke<GFp> H(3, g7(2), {g7(1), g7(4)});
    std::vector<HElem<GFp>> gens = {H.T(1), H.T(2), H.L(2), H.L(3),
                                    H.monomial({1, 1, 0}, Perm::transposition(3, 1))};
    for (const auto& a : gens)
        for (const auto& b : gens)
            for (const auto& c : gens)
                CHECK(H.mul(H.mul(a, b), c) == H.mul(a, H.mul(b, c)));
}

TEST_CASE("star and trace") {
    check_star_tau(Hecke<GFp>(3, g5(4), {g5(1)}), 1);
    check_star_tau(Hecke<GFp>(3, g7(2), {g7(1), g7(4)}), 3);
    check_star_tau(Hecke<GFp>(2, g5(1), {g5(0), g5(3)}), 1);

    Hecke<GFp> H(2, g5(4), {g5(1)});
    CHECK(H.tau(H.one()) == g5(1));
    CHECK(H.tau(H.T(1)) == g5(0));
    // q = 1: the trace picks the top L-exponent coefficient
    Hecke<GFp> D(2, g5(1), {g5(0), g5(3)});
    CHECK(D.tau(D.monomial({1, 1}, Perm(2))) == g5(1));
    CHECK(D.tau(D.one()) == g5(0));
}

TEST_CASE("frozen small elements") {
    Hecke<GFp> H(2, g5(4), {g5(1)});
    // L_2 = q^{-1} T_1 L_1 T_1 with L_1 = 1: over GF(5), q = 4 this is 2 T_1 + 1
    CHECK(H.L(2) == H.T(1) * g5(2) + H.one());

    Multipartition two = mp({{2}}), oneone = mp({{1, 1}});
    CHECK(m_lambda(H, two) == H.one() + H.T(1));
    CHECK(m_lambda(H, oneone) == H.one());
    CHECK(n_lambda(H, two) == H.one() - H.T(1) * g5(4).inv());
    CHECK(n_lambda(H, oneone) == H.one());

    // z_lambda at n = 2
    CHECK(z_lambda_elem(H, two) == H.one() + H.T(1));
    CHECK(z_lambda_elem(H, oneone) == H.one() - H.T(1) * g5(4).inv());

    Hecke<GFp> H2(2, g7(2), {g7(4), g7(1)});
    Multipartition ll = mp({{1}, {1}});
    CHECK(m_lambda(H2, ll) == H2.L(1) - H2.one());
}

TEST_CASE("cellular action of the Jucys-Murphy elements") {
    // semisimple configurations so the full transition matrix is invertible
    check_cellular_action(Hecke<GFp>(2, g7(2), {g7(3), g7(1)}), false);
    check_cellular_action(Hecke<GFp>(2, g7(2), {g7(3), g7(1)}), true);
    check_cellular_action(Hecke<Rat>(3, Rat(2), {Rat(1)}), false);
    check_cellular_action(Hecke<Rat>(3, Rat(2), {Rat(1)}), true);
    check_cellular_action(Hecke<GFp>(2, g5(1), {g5(0), g5(3)}), false);
    check_cellular_action(Hecke<GFp>(2, g5(1), {g5(0), g5(3)}), true);
}

TEST_CASE("cellular basis stays a basis away from semisimplicity") {
    // transition to the AK basis must be invertible over any parameters
    for (bool dual : {false, true}) {
        Hecke<GFp> H(3, g5(4), {g5(1)});  // e = 2 <= n
        std::vector<HElem<GFp>> cell;
        for (const Multipartition& shape : multipartitions(3, 1)) {
            HElem<GFp> gen = dual ? n_lambda(H, shape) : m_lambda(H, shape);
            for (const Tableau& s : standard_tableaux(shape))
                for (const Tableau& t : standard_tableaux(shape))
                    cell.push_back(dual ? n_st(H, gen, s, t) : m_st(H, gen, s, t));
        }
        size_t d = H.basis().size();
        REQUIRE(cell.size() == d);
        Matrix<GFp> A = zero_matrix<GFp>(static_cast<int>(d), static_cast<int>(d), g5(0));
        for (size_t j = 0; j < d; ++j) {
            auto v = H.coords(cell[j]);
            for (size_t i = 0; i < d; ++i) A[i][j] = v[i];
        }
        CHECK(gauss_rank(A) == static_cast<int>(d));
    }
}

TEST_CASE("semisimplicity criterion") {
    CHECK(!Hecke<GFp>(2, g5(4), {g5(1)}).is_semisimple());      // e = 2
    CHECK(Hecke<GFp>(1, g5(4), {g5(1)}).is_semisimple());
    CHECK(Hecke<Rat>(5, Rat(2), {Rat(1)}).is_semisimple());     // e = 0
    CHECK(Hecke<GFp>(2, g7(2), {g7(3), g7(1)}).is_semisimple());
    CHECK(!Hecke<GFp>(2, g7(2), {g7(4), g7(1)}).is_semisimple());  // q Q_1 = Q_2
    CHECK(Hecke<GFp>(2, g5(1), {g5(0), g5(3)}).is_semisimple());
    CHECK(!Hecke<GFp>(4, g5(1), {g5(0), g5(3)}).is_semisimple());  // 3 + Q_1 = Q_2
    CHECK(!Hecke<GFp>(5, g5(1), {g5(0)}).is_semisimple());         // e = 5 = n
    CHECK(Hecke<Rat>(3, Rat(1), {Rat(0), Rat(5)}).is_semisimple());
}

TEST_CASE("murphy star symmetry") {
    Hecke<GFp> H(3, g7(2), {g7(3), g7(1)});
    for (const Multipartition& shape : multipartitions(3, 2)) {
        HElem<GFp> mlam = m_lambda(H, shape);
        HElem<GFp> nlam = n_lambda(H, shape);
        CHECK(H.star(mlam) == mlam);
        CHECK(H.star(nlam) == nlam);
        const auto& tabs = standard_tableaux(shape);
        for (const Tableau& s : tabs)
            for (const Tableau& t : tabs) {
                CHECK(H.star(m_st(H, mlam, s, t)) == m_st(H, mlam, t, s));
                CHECK(H.star(n_st(H, nlam, s, t)) == n_st(H, nlam, t, s));
            }
    }
}
