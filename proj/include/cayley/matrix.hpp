#pragma once

#include <cstddef>
#include <vector>

#include <gmpxx.h>

#include "cayley/cyclotomic.hpp"
#include "cayley/errors.hpp"

namespace cayley {

// Cheap zero tests for the supported scalar types (avoids constructing a
// temporary zero per comparison in the hot loops).
inline bool entry_is_zero(const CycNum& x) { return x.is_zero(); }
inline bool entry_is_zero(const mpq_class& x) { return sgn(x) == 0; }
inline bool entry_is_zero(const mpz_class& x) { return sgn(x) == 0; }

// Dense row-major matrix over an exact scalar type.  Sizes in this library
// are small (at most 248x248), so a dense representation with zero-skipping
// products is both simple and fast enough.
template <typename T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols)
        : rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
        if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
    }

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& operator()(int i, int j) { return e_[idx(i, j)]; }
    const T& operator()(int i, int j) const { return e_[idx(i, j)]; }

    Mat operator-() const {
        Mat r(rows_, cols_);
        for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = -e_[k];
        return r;
    }

    Mat& operator+=(const Mat& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] += o.e_[k];
        return *this;
    }
    Mat& operator-=(const Mat& o) {
        require_same_shape(o);
        for (std::size_t k = 0; k < e_.size(); ++k) e_[k] -= o.e_[k];
        return *this;
    }

    friend Mat operator+(Mat a, const Mat& b) { return a += b; }
    friend Mat operator-(Mat a, const Mat& b) { return a -= b; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_)
            throw DimensionMismatch("matrix product shape mismatch");
        Mat r(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (entry_is_zero(aik)) continue; // inputs are usually sparse
                for (int j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (entry_is_zero(bkj)) continue;
                    r(i, j) += aik * bkj;
                }
            }
        return r;
    }

    friend Mat operator*(const T& s, const Mat& m) {
        Mat r(m.rows_, m.cols_);
        for (std::size_t k = 0; k < m.e_.size(); ++k) r.e_[k] = s * m.e_[k];
        return r;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        if (static_cast<int>(v.size()) != cols_)
            throw DimensionMismatch("matrix-vector shape mismatch");
        std::vector<T> r(static_cast<std::size_t>(rows_), T(0));
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                const T& a = (*this)(i, j);
                if (entry_is_zero(a)) continue;
                r[static_cast<std::size_t>(i)] += a * v[static_cast<std::size_t>(j)];
            }
        return r;
    }

    Mat transposed() const {
        Mat r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    T trace() const {
        if (!is_square()) throw DimensionMismatch("trace of a non-square matrix");
        T t(0);
        for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    bool is_zero() const {
        for (const T& x : e_)
            if (!entry_is_zero(x)) return false;
        return true;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(j);
    }
    void require_same_shape(const Mat& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw DimensionMismatch("matrix shape mismatch");
    }

    int rows_, cols_;
    std::vector<T> e_;
};

using CycMatrix = Mat<CycNum>;
using QMatrix = Mat<mpq_class>;
using IntMatrix = Mat<mpz_class>;

// Entrywise complex conjugate (cyclotomic matrices only).
inline CycMatrix conj(const CycMatrix& m) {
    CycMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).conj();
    return r;
}

// Conjugate transpose.
inline CycMatrix dagger(const CycMatrix& m) { return conj(m).transposed(); }

} // namespace cayley
