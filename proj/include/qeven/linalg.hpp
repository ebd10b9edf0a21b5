#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

#include "qeven/laurent.hpp"
#include "qeven/ratfunc.hpp"

namespace qeven {

namespace detail {

inline bool scalar_is_zero(const Rational& x) { return x == 0; }
inline bool scalar_is_zero(const Laurent& x) { return x.is_zero(); }
inline bool scalar_is_zero(const RatFunc& x) { return x.is_zero(); }

} // namespace detail

// Exact dense matrix over a commutative scalar type (Laurent for module
// actions, Rational or RatFunc for elimination).  Row-major; actions apply
// on the left of coordinate columns.
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, T fill = T())
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    T& operator()(std::size_t r, std::size_t c) {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }
    const T& operator()(std::size_t r, std::size_t c) const {
        assert(r < rows_ && c < cols_);
        return data_[r * cols_ + c];
    }

    bool is_zero() const {
        for (const T& x : data_)
            if (!detail::scalar_is_zero(x)) return false;
        return true;
    }

    bool operator==(const Matrix&) const = default;

    Matrix& operator+=(const Matrix& o) {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
        return *this;
    }

    Matrix& operator-=(const Matrix& o) {
        assert(rows_ == o.rows_ && cols_ == o.cols_);
        for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
        return *this;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        assert(a.cols_ == b.rows_);
        Matrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                if (detail::scalar_is_zero(aik)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    const T& bkj = b(k, j);
                    if (!detail::scalar_is_zero(bkj)) out(i, j) += aik * bkj;
                }
            }
        return out;
    }

    Matrix scaled(const T& s) const {
        Matrix out = *this;
        for (T& x : out.data_) x = x * s;
        return out;
    }

    std::vector<T> apply(const std::vector<T>& v) const {
        assert(v.size() == cols_);
        std::vector<T> out(rows_, T());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j)
                if (!detail::scalar_is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
        return out;
    }

    template <typename F>
    auto map(F&& f) const {
        using U = decltype(f(std::declval<const T&>()));
        Matrix<U> out(rows_, cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out(i, j) = f((*this)(i, j));
        return out;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> data_;
};

template <typename T>
Matrix<T> pow(const Matrix<T>& m, unsigned n) {
    assert(m.rows() == m.cols());
    Matrix<T> acc = Matrix<T>::identity(m.rows());
    Matrix<T> b = m;
    while (n > 0) {
        if (n & 1) acc = acc * b;
        b = b * b;
        n >>= 1;
    }
    return acc;
}

inline Matrix<Rational> eval_matrix(const Matrix<Laurent>& m, const QValue& q) {
    return m.map([&](const Laurent& e) { return e.eval(q.value()); });
}

inline Matrix<RatFunc> lift_matrix(const Matrix<Laurent>& m) {
    return m.map([](const Laurent& e) { return RatFunc(e); });
}

/*
 * Gaussian elimination over an exact field (Rational or RatFunc).  Small
 * dimensions only; no pivot-size heuristics.
 */
template <typename F>
struct Echelon {
    Matrix<F> reduced;            // reduced row echelon form
    std::vector<std::size_t> pivot_cols;

    std::size_t rank() const noexcept { return pivot_cols.size(); }
};

template <typename F>
Echelon<F> row_reduce(Matrix<F> m) {
    Echelon<F> out{std::move(m), {}};
    Matrix<F>& a = out.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t piv = row;
        while (piv < a.rows() && detail::scalar_is_zero(a(piv, col))) ++piv;
        if (piv == a.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
        const F inv_lead = F(1) / a(row, col);
        for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) = a(row, j) * inv_lead;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == row || detail::scalar_is_zero(a(i, col))) continue;
            const F factor = a(i, col);
            for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= factor * a(row, j);
        }
        out.pivot_cols.push_back(col);
        ++row;
    }
    return out;
}

template <typename F>
std::size_t rank(const Matrix<F>& m) {
    return row_reduce(m).rank();
}

// Basis of the solution space of m v = 0, one vector per free column.
template <typename F>
std::vector<std::vector<F>> kernel_basis(const Matrix<F>& m) {
    Echelon<F> e = row_reduce(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(m.cols(), F(0));
        v[free] = F(1);
        for (std::size_t r = 0; r < e.pivot_cols.size(); ++r)
            v[e.pivot_cols[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

// Inverse over an exact field via elimination on [m | I]; nullopt when
// singular.
template <typename F>
std::optional<Matrix<F>> try_inverse(const Matrix<F>& m) {
    assert(m.rows() == m.cols());
    const std::size_t n = m.rows();
    Matrix<F> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = F(1);
    }
    Echelon<F> e = row_reduce(std::move(aug));
    if (e.rank() < n || e.pivot_cols[n - 1] != n - 1) return std::nullopt;
    Matrix<F> inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
    return inv;
}

/*
 * Incrementally maintained row space, used for spanning/irreducibility
 * checks: vectors go in, the tracker keeps a reduced basis.
 */
template <typename F>
class SpanTracker {
public:
    explicit SpanTracker(std::size_t dim) : dim_(dim) {}

    // Returns true when v enlarged the span.
    bool insert(std::vector<F> v) {
        assert(v.size() == dim_);
        for (const auto& [lead, row] : rows_) {
            if (detail::scalar_is_zero(v[lead])) continue;
            const F factor = v[lead];
            for (std::size_t j = 0; j < dim_; ++j) v[j] -= factor * row[j];
        }
        std::size_t lead = 0;
        while (lead < dim_ && detail::scalar_is_zero(v[lead])) ++lead;
        if (lead == dim_) return false;
        const F inv = F(1) / v[lead];
        for (std::size_t j = 0; j < dim_; ++j) v[j] = v[j] * inv;
        rows_.emplace_back(lead, std::move(v));
        return true;
    }

    std::size_t dim() const noexcept { return rows_.size(); }
    bool full() const noexcept { return rows_.size() == dim_; }

private:
    std::size_t dim_;
    std::vector<std::pair<std::size_t, std::vector<F>>> rows_;
};

} // namespace qeven
