#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "epw/errors.hpp"
#include "epw/scalar.hpp"

namespace epw {

/// Dense row-major matrix. Element arithmetic goes through a field policy.
template <class T>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0; }

    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const T> values) {
        if (rows_ == 0 && cols_ == 0) cols_ = values.size();
        if (values.size() != cols_) fail(ErrorCode::InvalidArgument, "row length mismatch");
        data_.insert(data_.end(), values.begin(), values.end());
        ++rows_;
    }
    void truncate_rows(std::size_t n) {
        rows_ = n;
        data_.resize(rows_ * cols_);
    }
    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
    Matrix<T> t(m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
    return t;
}

template <class F>
Matrix<typename F::Element> zero_matrix(const F& f, std::size_t rows, std::size_t cols) {
    return Matrix<typename F::Element>(rows, cols, f.zero());
}

template <class F>
Matrix<typename F::Element> multiply(const F& f, const Matrix<typename F::Element>& a,
                                     const Matrix<typename F::Element>& b) {
    if (a.cols() != b.rows()) fail(ErrorCode::InvalidArgument, "shape mismatch in multiply");
    auto out = zero_matrix(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (f.is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) = f.add(out(i, j), f.mul(a(i, k), b(k, j)));
        }
    return out;
}

template <class F>
std::vector<typename F::Element> apply(const F& f, const Matrix<typename F::Element>& m,
                                       std::span<const typename F::Element> x) {
    std::vector<typename F::Element> out(m.rows(), f.zero());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!f.is_zero(x[j])) out[i] = f.add(out[i], f.mul(m(i, j), x[j]));
    return out;
}

/// Reduced row-echelon form in place; zero rows are dropped. Returns pivot columns.
template <class F>
std::vector<std::size_t> rref_in_place(const F& f, Matrix<typename F::Element>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t sel = r;
        while (sel < m.rows() && f.is_zero(m(sel, c))) ++sel;
        if (sel == m.rows()) continue;
        m.swap_rows(r, sel);
        auto inv = f.inv(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = f.mul(m(r, j), inv);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || f.is_zero(m(i, c))) continue;
            auto factor = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                m(i, j) = f.sub(m(i, j), f.mul(factor, m(r, j)));
        }
        pivots.push_back(c);
        ++r;
    }
    m.truncate_rows(r);
    return pivots;
}

template <class F>
std::size_t rank(const F& f, Matrix<typename F::Element> m) {
    return rref_in_place(f, m).size();
}

/// Basis (as rows) of {x : m x = 0}.
template <class F>
Matrix<typename F::Element> kernel(const F& f, Matrix<typename F::Element> m) {
    const std::size_t n = m.cols();
    auto pivots = rref_in_place(f, m);
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    Matrix<typename F::Element> out(0, n);
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<typename F::Element> v(n, f.zero());
        v[free] = f.one();
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(m(i, free));
        out.append_row(v);
    }
    return out;
}

template <class F>
typename F::Element determinant(const F& f, Matrix<typename F::Element> m) {
    if (m.rows() != m.cols()) fail(ErrorCode::InvalidArgument, "determinant of a non-square matrix");
    const std::size_t n = m.rows();
    auto det = f.one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && f.is_zero(m(sel, c))) ++sel;
        if (sel == n) return f.zero();
        if (sel != c) {
            m.swap_rows(sel, c);
            det = f.neg(det);
        }
        det = f.mul(det, m(c, c));
        auto inv = f.inv(m(c, c));
        for (std::size_t i = c + 1; i < n; ++i) {
            if (f.is_zero(m(i, c))) continue;
            auto factor = f.mul(m(i, c), inv);
            for (std::size_t j = c; j < n; ++j) m(i, j) = f.sub(m(i, j), f.mul(factor, m(c, j)));
        }
    }
    return det;
}

/// Some x with m x = b, or nullopt.
template <class F>
std::optional<std::vector<typename F::Element>> solve(const F& f, const Matrix<typename F::Element>& m,
                                                      std::span<const typename F::Element> b) {
    Matrix<typename F::Element> aug(m.rows(), m.cols() + 1, f.zero());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    auto pivots = rref_in_place(f, aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    std::vector<typename F::Element> x(m.cols(), f.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
    return x;
}

template <class F>
Matrix<typename F::Element> stack(const F& f, const Matrix<typename F::Element>& a,
                                  const Matrix<typename F::Element>& b) {
    std::size_t cols = a.rows() ? a.cols() : b.cols();
    Matrix<typename F::Element> out(0, cols);
    (void)f;
    for (std::size_t i = 0; i < a.rows(); ++i) out.append_row(a.row(i));
    for (std::size_t i = 0; i < b.rows(); ++i) out.append_row(b.row(i));
    return out;
}

/// Reduce a rational matrix entrywise; throws BadReduction.
inline Matrix<std::uint32_t> reduce_matrix(const Matrix<Rational>& m, std::uint32_t p) {
    Matrix<std::uint32_t> out(m.rows(), m.cols(), 0);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = reduce_mod_p(m(i, j), p);
    return out;
}

}  // namespace epw
