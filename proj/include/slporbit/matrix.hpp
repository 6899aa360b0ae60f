#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace slporbit {

// Dense matrix over an exact scalar type. Everything here is desk scale
// (at most 2n x 2n with n <= 7), so no attention is paid to performance.
template <class F>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = F(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    F& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const F& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const {
        for (const F& v : data_)
            if (!(v == F(0))) return false;
        return true;
    }

    Matrix operator-() const {
        Matrix r(rows_, cols_);
        for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
        return r;
    }
    Matrix& operator+=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same_shape(o);
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const F& v = a.at(i, k);
                if (v == F(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += v * b.at(k, j);
            }
        return r;
    }
    friend Matrix operator*(const F& s, const Matrix& a) {
        Matrix r(a.rows_, a.cols_);
        for (std::size_t k = 0; k < a.data_.size(); ++k) r.data_[k] = s * a.data_[k];
        return r;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
        return r;
    }

    // Rows [r0, r1) and columns [c0, c1).
    Matrix block(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
        Matrix r(r1 - r0, c1 - c0);
        for (std::size_t i = r0; i < r1; ++i)
            for (std::size_t j = c0; j < c1; ++j) r.at(i - r0, j - c0) = at(i, j);
        return r;
    }

    // Principal submatrix on an arbitrary index set (rows and columns alike).
    Matrix principal(const std::vector<std::size_t>& idx) const {
        Matrix r(idx.size(), idx.size());
        for (std::size_t i = 0; i < idx.size(); ++i)
            for (std::size_t j = 0; j < idx.size(); ++j) r.at(i, j) = at(idx[i], idx[j]);
        return r;
    }

  private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<F> data_;
};

// Rank by Gaussian elimination with exact field division.
template <class F>
std::size_t rank(Matrix<F> m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m.at(pivot, c) == F(0)) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(r, j));
        F inv = F(1) / m.at(r, c);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, c) == F(0)) continue;
            F factor = m.at(i, c) * inv;
            for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= factor * m.at(r, j);
        }
        ++r;
    }
    return r;
}

template <class F>
Matrix<F> inverse(Matrix<F> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    Matrix<F> inv = Matrix<F>::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        while (pivot < n && m.at(pivot, c) == F(0)) ++pivot;
        if (pivot == n) throw std::domain_error("singular matrix");
        if (pivot != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(pivot, j), m.at(c, j));
                std::swap(inv.at(pivot, j), inv.at(c, j));
            }
        F pinv = F(1) / m.at(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            m.at(c, j) *= pinv;
            inv.at(c, j) *= pinv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || m.at(i, c) == F(0)) continue;
            F factor = m.at(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                m.at(i, j) -= factor * m.at(c, j);
                inv.at(i, j) -= factor * inv.at(c, j);
            }
        }
    }
    return inv;
}

}  // namespace slporbit
