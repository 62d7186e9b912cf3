#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cpa/exactfield.hpp"

namespace cpa {

class SingularMatrix : public std::domain_error {
public:
    SingularMatrix() : std::domain_error("matrix is singular") {}
};

template <class F>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
        return m;
    }

    static Matrix from_rows(const std::vector<std::vector<F>>& rows) {
        if (rows.empty()) return {};
        Matrix m(rows.size(), rows[0].size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != m.cols_) throw std::invalid_argument("ragged matrix rows");
            for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<F> row(std::size_t r) const {
        return std::vector<F>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
    }
    void append_row(const std::vector<F>& v) {
        if (rows_ == 0 && cols_ == 0) cols_ = v.size();
        if (v.size() != cols_) throw std::invalid_argument("row length mismatch");
        data_.insert(data_.end(), v.begin(), v.end());
        ++rows_;
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("matrix dimension mismatch");
        Matrix z(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const F& xik = x(i, k);
                if (is_zero(xik)) continue;
                for (std::size_t j = 0; j < y.cols_; ++j)
                    if (!is_zero(y(k, j))) z(i, j) += xik * y(k, j);
            }
        return z;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<F> data_;
};

template <class F>
struct RrefResult {
    Matrix<F> reduced;
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form; zero rows are dropped from `reduced`.
template <class F>
RrefResult<F> rref(Matrix<F> m) {
    RrefResult<F> out;
    std::size_t lead_row = 0;
    for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
        std::size_t p = lead_row;
        while (p < m.rows() && is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, lead_row);
        F inv = F(1) / m(lead_row, c);
        for (std::size_t j = c; j < m.cols(); ++j)
            if (!is_zero(m(lead_row, j))) m(lead_row, j) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == lead_row || is_zero(m(r, c))) continue;
            F f = m(r, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (!is_zero(m(lead_row, j))) m(r, j) -= f * m(lead_row, j);
        }
        out.pivots.push_back(c);
        ++lead_row;
    }
    out.rank = lead_row;
    Matrix<F> reduced(out.rank, m.cols());
    for (std::size_t r = 0; r < out.rank; ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) reduced(r, c) = m(r, c);
    out.reduced = std::move(reduced);
    return out;
}

/// Null-space basis, one vector per free column, in increasing free-column order.
template <class F>
std::vector<std::vector<F>> kernel(const Matrix<F>& m) {
    auto rr = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : rr.pivots) is_pivot[p] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<F> v(m.cols(), F(0));
        v[f] = F(1);
        for (std::size_t r = 0; r < rr.rank; ++r)
            if (!is_zero(rr.reduced(r, f))) v[rr.pivots[r]] = -rr.reduced(r, f);
        basis.push_back(std::move(v));
    }
    return basis;
}

template <class F>
Matrix<F> invert(const Matrix<F>& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("invert needs a square matrix");
    const std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
        aug(r, n + r) = F(1);
    }
    auto rr = rref(aug);
    if (rr.rank < n || rr.pivots[n - 1] != n - 1) throw SingularMatrix();
    Matrix<F> inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) inv(r, c) = rr.reduced(r, n + c);
    return inv;
}

template <class F>
std::size_t rank(const Matrix<F>& m) {
    return rref(m).rank;
}

}  // namespace cpa
