#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "semla/factorization.hpp"
#include "semla/matrix.hpp"

namespace semla {

// Substitution has no subtraction to lean on: it adds stored negations
// instead. That is exactly why it is restricted to Cholesky/LU-shaped
// factors, whose diagonal is invertible and whose strict off-diagonal
// entries are additively invertible. Violations abort rather than produce
// garbage.

namespace detail {

inline void require_vec_shape(const Matrix& m, const Vec& c) {
    require_same(m.semiring(), c.semiring());
    if (!m.square() || m.rows() != c.size())
        throw ShapeError("triangular solve needs a square matrix matching the vector");
}

} // namespace detail

// Solves L y = c for lower-triangular L:
//   y_i = L_ii^-1 (c_i + sum_{j<i} (-L_ij) y_j).
inline Vec forward_substitute(const Matrix& l, const Vec& c) {
    detail::require_vec_shape(l, c);
    const Semiring& s = *l.semiring();
    const std::size_t n = c.size();
    Vec y(l.semiring(), n);
    for (std::size_t i = 0; i < n; ++i) {
        Elem acc = c[i];
        for (std::size_t j = 0; j < i; ++j) {
            const auto neg = s.negation(l.at(i, j));
            if (!neg)
                throw StructureViolationError("subdiagonal entry " + s.name(l.at(i, j)) +
                                              " is not additively invertible");
            acc = s.add(acc, s.mul(*neg, y[j]));
        }
        const auto inv = s.inverse(l.at(i, i));
        if (!inv)
            throw StructureViolationError("diagonal entry " + s.name(l.at(i, i)) +
                                          " is not a unit");
        y[i] = s.mul(*inv, acc);
    }
    return y;
}

// Solves U y = c for upper-triangular U; mirror of forward_substitute.
inline Vec backward_substitute(const Matrix& u, const Vec& c) {
    detail::require_vec_shape(u, c);
    const Semiring& s = *u.semiring();
    const std::size_t n = c.size();
    Vec y(u.semiring(), n);
    for (std::size_t i = n; i-- > 0;) {
        Elem acc = c[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            const auto neg = s.negation(u.at(i, j));
            if (!neg)
                throw StructureViolationError("superdiagonal entry " + s.name(u.at(i, j)) +
                                              " is not additively invertible");
            acc = s.add(acc, s.mul(*neg, y[j]));
        }
        const auto inv = s.inverse(u.at(i, i));
        if (!inv)
            throw StructureViolationError("diagonal entry " + s.name(u.at(i, i)) +
                                          " is not a unit");
        y[i] = s.mul(*inv, acc);
    }
    return y;
}

struct SolveResult {
    CholeskyResult factorization;
    std::optional<Vec> solution;
    bool residual_verified = false;

    bool ok() const { return solution.has_value(); }
};

// Solves M y = c through the Cholesky factor: forward substitution on L,
// backward substitution on L^T. Arithmetic is exact, so the residual check
// can never fail for an invertible factor; a mismatch is an internal error.
inline SolveResult solve_spd(const Matrix& m, const Vec& c) {
    detail::require_vec_shape(m, c);
    SolveResult result{cholesky(m), std::nullopt, false};
    if (!result.factorization.ok())
        return result;
    const Matrix& l = *result.factorization.factor;
    Vec y = backward_substitute(transpose(l), forward_substitute(l, c));
    if (!(m * y == c))
        throw std::logic_error("exact solve produced a nonzero residual");
    result.solution = std::move(y);
    result.residual_verified = true;
    return result;
}

} // namespace semla
