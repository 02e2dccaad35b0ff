#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semla/enumerate.hpp"
#include "semla/semiring.hpp"

namespace semla {

namespace detail {

inline void require_same(const SemiringPtr& a, const SemiringPtr& b) {
    if (!same_semiring(a, b))
        throw SemiringMismatchError("operands belong to different semirings");
}

} // namespace detail

// A fixed-length vector of semiring elements.
class Vec {
public:
    Vec(SemiringPtr s, std::size_t n) : s_(std::move(s)), v_(n, s_->zero()) {}

    Vec(SemiringPtr s, std::vector<Elem> entries) : s_(std::move(s)), v_(std::move(entries)) {
        for (const Elem& e : v_)
            if (!s_->contains(e))
                throw MalformedTableError("vector entry out of range for its semiring");
    }

    std::size_t size() const { return v_.size(); }
    const SemiringPtr& semiring() const { return s_; }
    const Elem& operator[](std::size_t i) const { return v_[i]; }
    Elem& operator[](std::size_t i) { return v_[i]; }
    const std::vector<Elem>& entries() const { return v_; }

    bool operator==(const Vec& o) const { return same_semiring(s_, o.s_) && v_ == o.v_; }

private:
    SemiringPtr s_;
    std::vector<Elem> v_;
};

// Dense row-major matrix over a semiring. Immutable use is the norm; the
// few mutating helpers exist for construction.
class Matrix {
public:
    Matrix(SemiringPtr s, std::size_t rows, std::size_t cols)
        : s_(std::move(s)), rows_(rows), cols_(cols), a_(rows * cols, s_->zero()) {
        if (rows == 0 || cols == 0)
            throw ShapeError("matrices must have at least one row and column");
    }

    static Matrix from_rows(SemiringPtr s, const std::vector<std::vector<Elem>>& rows) {
        if (rows.empty() || rows.front().empty())
            throw ShapeError("matrices must have at least one row and column");
        Matrix m(std::move(s), rows.size(), rows.front().size());
        for (std::size_t i = 0; i < m.rows_; ++i) {
            if (rows[i].size() != m.cols_)
                throw ShapeError("ragged rows in matrix literal");
            for (std::size_t j = 0; j < m.cols_; ++j)
                m.set(i, j, rows[i][j]);
        }
        return m;
    }

    static Matrix identity(const SemiringPtr& s, std::size_t n) {
        Matrix m(s, n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.set(i, i, s->one());
        return m;
    }

    static Matrix zero(const SemiringPtr& s, std::size_t rows, std::size_t cols) {
        return Matrix(s, rows, cols);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }
    const SemiringPtr& semiring() const { return s_; }

    const Elem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void set(std::size_t i, std::size_t j, const Elem& e) {
        if (!s_->contains(e))
            throw MalformedTableError("matrix entry out of range for its semiring");
        a_[i * cols_ + j] = e;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && same_semiring(s_, o.s_) && a_ == o.a_;
    }

private:
    SemiringPtr s_;
    std::size_t rows_, cols_;
    std::vector<Elem> a_;
};

inline Matrix operator+(const Matrix& a, const Matrix& b) {
    detail::require_same(a.semiring(), b.semiring());
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("matrix addition needs equal shapes");
    const Semiring& s = *a.semiring();
    Matrix out(a.semiring(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.set(i, j, s.add(a.at(i, j), b.at(i, j)));
    return out;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) {
    detail::require_same(a.semiring(), b.semiring());
    if (a.cols() != b.rows())
        throw ShapeError("matrix product needs conforming shapes");
    const Semiring& s = *a.semiring();
    Matrix out(a.semiring(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            Elem acc = s.zero();
            for (std::size_t k = 0; k < a.cols(); ++k)
                acc = s.add(acc, s.mul(a.at(i, k), b.at(k, j)));
            out.set(i, j, acc);
        }
    return out;
}

inline Vec operator*(const Matrix& a, const Vec& x) {
    detail::require_same(a.semiring(), x.semiring());
    if (a.cols() != x.size())
        throw ShapeError("matrix-vector product needs conforming shapes");
    const Semiring& s = *a.semiring();
    Vec out(a.semiring(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Elem acc = s.zero();
        for (std::size_t k = 0; k < a.cols(); ++k)
            acc = s.add(acc, s.mul(a.at(i, k), x[k]));
        out[i] = acc;
    }
    return out;
}

inline Matrix transpose(const Matrix& a) {
    Matrix out(a.semiring(), a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.set(j, i, a.at(i, j));
    return out;
}

inline bool is_symmetric(const Matrix& m) {
    if (!m.square())
        throw ShapeError("symmetry is defined for square matrices");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
            if (m.at(i, j) != m.at(j, i))
                return false;
    return true;
}

inline Matrix leading_principal_submatrix(const Matrix& m, std::size_t k) {
    if (!m.square())
        throw ShapeError("leading principal submatrices need a square matrix");
    if (k < 1 || k > m.rows())
        throw ShapeError("leading principal index out of range");
    Matrix out(m.semiring(), k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            out.set(i, j, m.at(i, j));
    return out;
}

// Split of a square matrix into the (1,1) entry, the first column tail, the
// first row tail and the trailing principal block. For symmetric input
// row == col.
struct BlockView {
    Elem a;
    Vec col;
    Vec row;
    Matrix trailing;
};

inline BlockView block_split(const Matrix& m) {
    if (!m.square() || m.rows() < 2)
        throw ShapeError("block split needs a square matrix of size >= 2");
    const std::size_t n = m.rows();
    Vec col(m.semiring(), n - 1), row(m.semiring(), n - 1);
    Matrix c(m.semiring(), n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
        col[i - 1] = m.at(i, 0);
        row[i - 1] = m.at(0, i);
        for (std::size_t j = 1; j < n; ++j)
            c.set(i - 1, j - 1, m.at(i, j));
    }
    return BlockView{m.at(0, 0), std::move(col), std::move(row), std::move(c)};
}

struct InversionResult {
    std::optional<Matrix> inverse;
    // First column of the identity for which M x = e_j has no solution;
    // meaningful only when inverse is empty and the search path was used.
    std::optional<std::size_t> failed_column;

    bool ok() const { return inverse.has_value(); }
};

namespace detail {

// Over antinegative semirings (V(S) = {0}) a matrix is invertible iff it is
// monomial: one unit entry per row and column, zeros elsewhere.
inline InversionResult invert_monomial(const Matrix& m) {
    const Semiring& s = *m.semiring();
    const std::size_t n = m.rows();
    const Elem zero = s.zero();
    std::vector<std::optional<std::size_t>> col_of_row(n);
    std::vector<bool> col_used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (m.at(i, j) == zero)
                continue;
            if (col_of_row[i] || col_used[j] || !s.is_unit(m.at(i, j)))
                return {std::nullopt, std::nullopt};
            col_of_row[i] = j;
            col_used[j] = true;
        }
        if (!col_of_row[i])
            return {std::nullopt, std::nullopt};
    }
    Matrix inv(m.semiring(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = *col_of_row[i];
        inv.set(j, i, *s.inverse(m.at(i, j)));
    }
    return {std::move(inv), std::nullopt};
}

inline bool antinegative(const Semiring& s) {
    if (s.kind() == SemiringKind::Naturals)
        return true;
    return s.derived().add_invertible.size() == 1;
}

} // namespace detail

// Exact inverse or a definite negative. Strategy: the monomial fast path
// when V(S) = {0}; otherwise a per-column exhaustive search over S^n
// followed by verification of both products.
inline InversionResult invert(const Matrix& m) {
    if (!m.square())
        throw ShapeError("only square matrices can be inverted");
    const Semiring& s = *m.semiring();
    if (detail::antinegative(s))
        return detail::invert_monomial(m);
    if (!s.finite())
        throw NotEnumerableError("no inversion strategy applies to this semiring");

    const std::size_t n = m.rows();
    const std::size_t q = s.order();
    Matrix inv(m.semiring(), n, n);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> digits(n, 0);
        bool found = false;
        do {
            bool match = true;
            for (std::size_t i = 0; i < n && match; ++i) {
                Elem acc = s.zero();
                for (std::size_t k = 0; k < n; ++k)
                    acc = s.add(acc, s.mul(m.at(i, k), Elem(digits[k])));
                match = acc == (i == j ? s.one() : s.zero());
            }
            if (match) {
                for (std::size_t k = 0; k < n; ++k)
                    inv.set(k, j, Elem(digits[k]));
                found = true;
                break;
            }
        } while (next_assignment(digits, q));
        if (!found)
            return {std::nullopt, j};
    }
    // Columnwise construction gives M X = I; the reverse product is checked
    // rather than assumed.
    if (!(inv * m == Matrix::identity(m.semiring(), n)))
        throw std::logic_error("one-sided inverse failed the reverse product check");
    return {std::move(inv), std::nullopt};
}

struct StrongInvertibility {
    bool ok = false;
    std::size_t failing_k = 0; // 1-based size of the first non-invertible leading block

    explicit operator bool() const { return ok; }
};

// True iff every leading principal submatrix is invertible.
inline StrongInvertibility is_strongly_invertible(const Matrix& m) {
    if (!m.square())
        throw ShapeError("strong invertibility is defined for square matrices");
    for (std::size_t k = 1; k <= m.rows(); ++k)
        if (!invert(leading_principal_submatrix(m, k)).ok())
            return {false, k};
    return {true, 0};
}

} // namespace semla
