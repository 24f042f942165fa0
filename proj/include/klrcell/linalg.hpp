#pragma once

#include "klrcell/ring.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace klrcell {

template <FieldScalar F>
using Matrix = std::vector<std::vector<F>>;

template <FieldScalar F>
Matrix<F> zero_matrix(int rows, int cols, const F& model) {
    return Matrix<F>(rows, std::vector<F>(cols, model.from_int(0)));
}

template <FieldScalar F>
Matrix<F> identity_matrix(int n, const F& model) {
    Matrix<F> a = zero_matrix(n, n, model);
    for (int i = 0; i < n; ++i) a[i][i] = model.from_int(1);
    return a;
}

template <FieldScalar F>
Matrix<F> transpose(const Matrix<F>& a) {
    if (a.empty()) return {};
    Matrix<F> t(a[0].size(), std::vector<F>(a.size(), a[0][0].from_int(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

template <FieldScalar F>
Matrix<F> mat_mul(const Matrix<F>& a, const Matrix<F>& b) {
    if (a.empty() || b.empty()) return {};
    size_t n = a.size(), m = b[0].size(), k = b.size();
    Matrix<F> c(n, std::vector<F>(m, a[0][0].from_int(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (size_t j = 0; j < m; ++j) c[i][j] = c[i][j] + a[i][t] * b[t][j];
        }
    return c;
}

// Rank by plain Gaussian elimination; the field is exact, so any nonzero
// pivot works and the left-to-right column sweep keeps it deterministic.
template <FieldScalar F>
int gauss_rank(Matrix<F> a) {
    if (a.empty()) return 0;
    int rows = static_cast<int>(a.size());
    int cols = static_cast<int>(a[0].size());
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (!a[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        F inv = a[rank][col].inv();
        for (int c = col; c < cols; ++c) a[rank][c] = a[rank][c] * inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || a[r][col].is_zero()) continue;
            F f = a[r][col];
            for (int c = col; c < cols; ++c) a[r][c] = a[r][c] - f * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

// Solve a x = b for square a; nullopt when a is singular.
template <FieldScalar F>
std::optional<Matrix<F>> solve_linear(Matrix<F> a, Matrix<F> b) {
    int n = static_cast<int>(a.size());
    if (n == 0) return Matrix<F>{};
    if (static_cast<int>(a[0].size()) != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("solve_linear: shape mismatch");
    int m = static_cast<int>(b[0].size());
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a[r][col].is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) return std::nullopt;
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        F inv = a[col][col].inv();
        for (int c = col; c < n; ++c) a[col][c] = a[col][c] * inv;
        for (int c = 0; c < m; ++c) b[col][c] = b[col][c] * inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            F f = a[r][col];
            for (int c = col; c < n; ++c) a[r][c] = a[r][c] - f * a[col][c];
            for (int c = 0; c < m; ++c) b[r][c] = b[r][c] - f * b[col][c];
        }
    }
    return b;
}

template <FieldScalar F>
std::optional<Matrix<F>> invert(const Matrix<F>& a) {
    if (a.empty()) return Matrix<F>{};
    return solve_linear(a, identity_matrix<F>(static_cast<int>(a.size()), a[0][0]));
}

}  // namespace klrcell
