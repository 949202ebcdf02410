#ifndef PFLAB_MATRIX_HPP
#define PFLAB_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "pflab/errors.hpp"
#include "pflab/rng.hpp"
#include "pflab/scalar.hpp"

namespace pflab {

// Dense row-major matrix over a field scalar. Indices are 0-based.
template <Field S>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const S& fill = S(0))
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    S& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const S& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw ShapeError("matrix product shape mismatch");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const S& aik = a(i, k);
                if (ScalarTraits<S>::is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c(i, j) += aik * b(k, j);
            }
        return c;
    }

    Matrix transposed() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<S> data_;
};

// Pivoted elimination determinant. Exact mode takes the first nonzero pivot
// in the working column; float mode the max-magnitude one.
template <Field S>
S determinant(const Matrix<S>& m) {
    if (m.rows() != m.cols()) throw ShapeError("determinant requires a square matrix");
    const std::size_t n = m.rows();
    Matrix<S> w = m;
    S det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        for (std::size_t r = c + 1; r < n; ++r)
            if (ScalarTraits<S>::pivot_better(w(r, c), w(pivot, c))) pivot = r;
        if (ScalarTraits<S>::is_zero(w(pivot, c))) return S(0);
        if (pivot != c) {
            for (std::size_t j = 0; j < n; ++j) std::swap(w(c, j), w(pivot, j));
            det = -det;
        }
        det = det * w(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (ScalarTraits<S>::is_zero(w(r, c))) continue;
            S f = w(r, c) / w(c, c);
            for (std::size_t j = c; j < n; ++j) w(r, j) = w(r, j) - f * w(c, j);
        }
    }
    return det;
}

// Even-order skew-symmetric matrix. Only the strict upper triangle is
// stored, so a(i,j) == -a(j,i) holds structurally; the diagonal is zero.
template <Field S>
class SkewMatrix {
public:
    explicit SkewMatrix(std::size_t order) : order_(order) {
        if (order % 2 != 0) throw OddOrderError(order);
        upper_.assign(order * (order - 1) / 2, S(0));
    }

    std::size_t order() const { return order_; }
    std::size_t half_order() const { return order_ / 2; }

    // Entry a(i,j); sign-resolved through the stored strict upper triangle.
    S a(std::size_t i, std::size_t j) const {
        if (i == j) return S(0);
        if (i < j) return upper_[idx(i, j)];
        return -upper_[idx(j, i)];
    }

    // Sets a(i,j) = v (and implicitly a(j,i) = -v); requires i < j.
    void set(std::size_t i, std::size_t j, const S& v) {
        if (i >= j || j >= order_) throw ShapeError("skew entry requires 0 <= i < j < order");
        upper_[idx(i, j)] = v;
    }

    Matrix<S> to_full() const {
        Matrix<S> m(order_, order_);
        for (std::size_t i = 0; i < order_; ++i)
            for (std::size_t j = 0; j < order_; ++j) m(i, j) = a(i, j);
        return m;
    }

    SkewMatrix scaled(const S& c) const {
        SkewMatrix s(order_);
        for (std::size_t i = 0; i < order_; ++i)
            for (std::size_t j = i + 1; j < order_; ++j) s.set(i, j, c * a(i, j));
        return s;
    }

    template <Field T>
    SkewMatrix<T> cast() const {
        SkewMatrix<T> s(order_);
        for (std::size_t i = 0; i < order_; ++i)
            for (std::size_t j = i + 1; j < order_; ++j)
                s.set(i, j, T(ScalarTraits<S>::to_double(a(i, j))));
        return s;
    }

    friend bool operator==(const SkewMatrix& x, const SkewMatrix& y) {
        return x.order_ == y.order_ && x.upper_ == y.upper_;
    }

private:
    // Row-major offset into the strict upper triangle.
    std::size_t idx(std::size_t i, std::size_t j) const {
        return i * order_ - i * (i + 1) / 2 + (j - i - 1);
    }

    std::size_t order_;
    std::vector<S> upper_;
};

// B A B^T for square B of matching order; the result is skew by construction.
template <Field S>
SkewMatrix<S> congruence_transform(const SkewMatrix<S>& a, const Matrix<S>& b) {
    if (b.rows() != b.cols() || b.rows() != a.order())
        throw ShapeError("congruence transform requires square B of matching order");
    Matrix<S> p = b * a.to_full() * b.transposed();
    SkewMatrix<S> out(a.order());
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = i + 1; j < a.order(); ++j) out.set(i, j, p(i, j));
    return out;
}

inline SkewMatrix<Rational> random_integer_skew(Rng& rng, std::size_t order, long bound = 9) {
    SkewMatrix<Rational> a(order);
    for (std::size_t i = 0; i < order; ++i)
        for (std::size_t j = i + 1; j < order; ++j) a.set(i, j, rng.integer_scalar(bound));
    return a;
}

inline Matrix<Rational> random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                                              long bound = 9) {
    Matrix<Rational> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.integer_scalar(bound);
    return m;
}

} // namespace pflab

#endif
