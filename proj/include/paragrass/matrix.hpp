#pragma once

#include <stdexcept>
#include <vector>

#include "paragrass/scalar.hpp"

namespace paragrass {

// Dense matrix over the scalar backend C.  Payloads of every kind live here:
// operators are square, kets are single-column, bras single-row and plain
// scalars 1x1.  Sizes never exceed (n+1) so nothing clever is needed.
template <class C>
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, scalar_traits<C>::zero()) {
        if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
    }

    static Matrix identity(int dim) {
        Matrix m(dim, dim);
        for (int i = 0; i < dim; ++i) m(i, i) = scalar_traits<C>::one();
        return m;
    }
    static Matrix scalar(const C& value) {
        Matrix m(1, 1);
        m(0, 0) = value;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    C& operator()(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
    const C& operator()(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }

    bool is_zero() const {
        for (const C& v : data_)
            if (!scalar_traits<C>::is_zero(v)) return false;
        return true;
    }

    Matrix operator-() const {
        Matrix m = *this;
        for (C& v : m.data_) v = -v;
        return m;
    }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix m = a;
        for (size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = m.data_[i] + b.data_[i];
        return m;
    }
    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        a.check_same_shape(b);
        Matrix m = a;
        for (size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = m.data_[i] - b.data_[i];
        return m;
    }
    friend Matrix operator*(const C& s, const Matrix& a) {
        Matrix m = a;
        for (C& v : m.data_) v = s * v;
        return m;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::domain_error("matrix shape mismatch in product");
        Matrix m(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const C& aik = a(i, k);
                if (scalar_traits<C>::is_zero(aik)) continue;
                for (int j = 0; j < b.cols_; ++j) m(i, j) += aik * b(k, j);
            }
        return m;
    }

    Matrix conjugate_transpose() const {
        Matrix m(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) m(j, i) = scalar_traits<C>::conj((*this)(i, j));
        return m;
    }

    // Conjugation by the parity matrix P = diag((-1)^k): flips the sign of
    // every entry whose row+column parity is odd.  For single-row/column
    // payloads only the non-trivial side acts (P C for kets, C P for bras),
    // which the same index rule covers because the 1-sized axis is index 0.
    Matrix parity_conjugate() const {
        Matrix m = *this;
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if ((i + j) % 2 != 0) m(i, j) = -m(i, j);
        return m;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
        for (size_t i = 0; i < a.data_.size(); ++i)
            if (!scalar_traits<C>::is_zero(a.data_[i] - b.data_[i])) return false;
        return true;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  private:
    void check_same_shape(const Matrix& b) const {
        if (rows_ != b.rows_ || cols_ != b.cols_) throw std::domain_error("matrix shape mismatch");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<C> data_;
};

}  // namespace paragrass
