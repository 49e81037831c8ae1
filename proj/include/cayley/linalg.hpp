#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cayley/matrix.hpp"

namespace cayley {

// Exact Gauss-Jordan elimination over a field type (CycNum or mpq_class).
// Reduces m in place to reduced row echelon form and returns the pivot
// columns; the rank is pivots.size().
template <typename F>
std::vector<int> row_reduce(Mat<F>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!(m(i, col) == F(0))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        F inv = F(1) / m(row, col);
        for (int j = col; j < m.cols(); ++j) m(row, j) = inv * m(row, j);
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == F(0)) continue;
            F f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

// Rank together with a basis of the right kernel (vectors x with m x = 0).
// The kernel basis is in the canonical rref parametrization: one vector per
// free column, with a 1 in that column's slot.
template <typename F>
std::pair<int, std::vector<std::vector<F>>> rank_kernel(Mat<F> m) {
    std::vector<int> pivots = row_reduce(m);
    int n = m.cols();
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
    std::vector<std::vector<F>> kernel;
    for (int free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
        std::vector<F> v(static_cast<std::size_t>(n), F(0));
        v[static_cast<std::size_t>(free_col)] = F(1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -m(static_cast<int>(r), free_col);
        kernel.push_back(std::move(v));
    }
    return {static_cast<int>(pivots.size()), std::move(kernel)};
}

template <typename F>
int rank(const Mat<F>& m) {
    Mat<F> c = m;
    return static_cast<int>(row_reduce(c).size());
}

// Solve a x = b exactly; nullopt when the system is inconsistent.  If the
// solution is not unique the free variables are set to zero.
template <typename F>
std::optional<std::vector<F>> solve(const Mat<F>& a, const std::vector<F>& b) {
    if (static_cast<int>(b.size()) != a.rows())
        throw DimensionMismatch("solve: right-hand side has wrong length");
    Mat<F> aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[static_cast<std::size_t>(i)];
    }
    std::vector<int> pivots = row_reduce(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
    std::vector<F> x(static_cast<std::size_t>(a.cols()), F(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<std::size_t>(pivots[r])] = aug(static_cast<int>(r), a.cols());
    return x;
}

template <typename F>
std::optional<Mat<F>> inverse(const Mat<F>& a) {
    if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    int n = a.rows();
    Mat<F> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = F(1);
    }
    std::vector<int> pivots = row_reduce(aug);
    if (static_cast<int>(pivots.size()) != n) return std::nullopt;
    Mat<F> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// Determinant by fraction-producing Gaussian elimination (exact over a field).
template <typename F>
F det(Mat<F> m) {
    if (!m.is_square()) throw DimensionMismatch("determinant of a non-square matrix");
    int n = m.rows();
    F d(1);
    for (int col = 0; col < n; ++col) {
        int p = -1;
        for (int i = col; i < n; ++i)
            if (!(m(i, col) == F(0))) {
                p = i;
                break;
            }
        if (p < 0) return F(0);
        if (p != col) {
            for (int j = 0; j < n; ++j) std::swap(m(p, j), m(col, j));
            d = -d;
        }
        d = d * m(col, col);
        F inv = F(1) / m(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (m(i, col) == F(0)) continue;
            F f = inv * m(i, col);
            for (int j = col; j < n; ++j) m(i, j) -= f * m(col, j);
        }
    }
    return d;
}

// One rational eigenvalue with its exact eigenspace.
struct Eigenspace {
    mpq_class value;
    int multiplicity; // algebraic = geometric (checked)
    std::vector<std::vector<CycNum>> basis;
};

// Exact eigendecomposition of a matrix with rational entries whose spectrum
// is rational and semisimple.  The characteristic polynomial is computed
// exactly; its roots are found by the rational root theorem.  Throws
// SpectralError if the spectrum is irrational or the matrix is defective
// (algebraic multiplicity exceeding geometric anywhere).
std::vector<Eigenspace> rational_eigenspaces(const CycMatrix& m);

// Exact characteristic polynomial of an integer matrix, lowest degree first
// (coefficients of x^0 .. x^n, monic).  Exposed for tests.
std::vector<mpz_class> char_poly(const IntMatrix& m);

} // namespace cayley
