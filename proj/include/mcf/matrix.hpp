#pragma once

#include <vector>

#include "mcf/poly.hpp"
#include "mcf/rational.hpp"

namespace mcf {

// Field customization points used by the generic elimination routines.
inline bool field_is_zero(const Rational& a) { return a == 0; }
inline Rational field_div(const Rational& a, const Rational& b) { return a / b; }
inline Rational field_zero_like(const Rational&) { return Rational(0); }
inline Rational field_one_like(const Rational&) { return Rational(1); }

// Small dense matrix over an exact field (Q or a number field).
template <class T>
class Mat {
public:
    Mat(size_t rows, size_t cols, const T& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    T& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const T& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw InternalCheckFailure("matrix dimension mismatch");
        Mat r(a.rows_, b.cols_, field_zero_like(a.data_.front()));
        for (size_t i = 0; i < a.rows_; ++i)
            for (size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a.at(i, k);
                if (field_is_zero(aik)) continue;
                for (size_t j = 0; j < b.cols_; ++j) r.at(i, j) = r.at(i, j) + aik * b.at(k, j);
            }
        return r;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    Mat transposed() const {
        Mat r(cols_, rows_, data_.front());
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

private:
    size_t rows_, cols_;
    std::vector<T> data_;
};

using MatQ = Mat<Rational>;

inline MatQ identity_matrix(size_t n) {
    MatQ r(n, n, Rational(0));
    for (size_t i = 0; i < n; ++i) r.at(i, i) = 1;
    return r;
}

// Determinant by fraction-producing Gaussian elimination; exact.
template <class T>
T determinant(Mat<T> a) {
    if (a.rows() != a.cols()) throw InternalCheckFailure("determinant of a non-square matrix");
    size_t n = a.rows();
    T det = field_one_like(a.at(0, 0));
    bool negate = false;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && field_is_zero(a.at(piv, col))) ++piv;
        if (piv == n) return field_zero_like(det);
        if (piv != col) {
            for (size_t j = 0; j < n; ++j) std::swap(a.at(piv, j), a.at(col, j));
            negate = !negate;
        }
        det = det * a.at(col, col);
        for (size_t i = col + 1; i < n; ++i) {
            if (field_is_zero(a.at(i, col))) continue;
            T f = field_div(a.at(i, col), a.at(col, col));
            for (size_t j = col; j < n; ++j) a.at(i, j) = a.at(i, j) - f * a.at(col, j);
        }
    }
    if (negate) det = field_zero_like(det) - det;
    return det;
}

// Basis of the right nullspace, via Gauss-Jordan reduction; exact.
template <class T>
std::vector<std::vector<T>> kernel_basis(Mat<T> a) {
    size_t n = a.rows(), m = a.cols();
    T zero = field_zero_like(a.at(0, 0));
    T one = field_one_like(a.at(0, 0));
    std::vector<long> pivot_of_col(m, -1);
    size_t row = 0;
    for (size_t col = 0; col < m && row < n; ++col) {
        size_t piv = row;
        while (piv < n && field_is_zero(a.at(piv, col))) ++piv;
        if (piv == n) continue;
        if (piv != row)
            for (size_t j = 0; j < m; ++j) std::swap(a.at(piv, j), a.at(row, j));
        T inv_p = field_div(one, a.at(row, col));
        for (size_t j = 0; j < m; ++j) a.at(row, j) = a.at(row, j) * inv_p;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || field_is_zero(a.at(i, col))) continue;
            T f = a.at(i, col);
            for (size_t j = 0; j < m; ++j) a.at(i, j) = a.at(i, j) - f * a.at(row, j);
        }
        pivot_of_col[col] = static_cast<long>(row);
        ++row;
    }
    std::vector<std::vector<T>> basis;
    for (size_t free_col = 0; free_col < m; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<T> v(m, zero);
        v[free_col] = one;
        for (size_t col = 0; col < m; ++col)
            if (pivot_of_col[col] >= 0)
                v[col] = zero - a.at(static_cast<size_t>(pivot_of_col[col]), free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Characteristic polynomial det(X*I - A) by the division-free Berkowitz
// algorithm; returned monic, coefficients exact.
PolyQ charpoly_berkowitz(const MatQ& a);

}  // namespace mcf
