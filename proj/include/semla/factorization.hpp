#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semla/enumerate.hpp"
#include "semla/matrix.hpp"
#include "semla/numerical_range.hpp"

namespace semla {

namespace detail {

// Shared precondition of the Schur complement: unit pivot, additively
// invertible first column. Returns (a^-1, -b) ready for use.
inline std::pair<Elem, Vec> schur_ingredients(const Matrix& m) {
    const Semiring& s = *m.semiring();
    const BlockView bv = block_split(m);
    const auto inv = s.inverse(bv.a);
    if (!inv)
        throw PivotNotInvertibleError("(1,1) entry " + s.name(bv.a) + " is not a unit");
    Vec neg(m.semiring(), bv.col.size());
    for (std::size_t i = 0; i < bv.col.size(); ++i) {
        const auto n = s.negation(bv.col[i]);
        if (!n)
            throw SubdiagonalNotNegatableError("first-column entry " + s.name(bv.col[i]) +
                                               " is not additively invertible");
        neg[i] = *n;
    }
    return {*inv, std::move(neg)};
}

// C + a^-1 (-b) r^T for the first-row tail r. The matched-form Schur
// complement is the r = b case; lu() uses the general one.
inline Matrix schur_complement_general(const Matrix& m) {
    const Semiring& s = *m.semiring();
    const BlockView bv = block_split(m);
    auto [ainv, neg] = schur_ingredients(m);
    Matrix out = bv.trailing;
    for (std::size_t i = 0; i < neg.size(); ++i) {
        const Elem coef = s.mul(ainv, neg[i]);
        for (std::size_t j = 0; j < neg.size(); ++j)
            out.set(i, j, s.add(out.at(i, j), s.mul(coef, bv.row[j])));
    }
    return out;
}

} // namespace detail

// Schur complement M/a = C + a^-1 (-b) b^T of the leading 1x1 block of
// M = [[a, b^T], [b, C]]. The first row must equal the transposed first
// column; lu() handles the unmatched case internally.
inline Matrix schur_complement(const Matrix& m) {
    const BlockView bv = block_split(m);
    if (!(bv.row == bv.col))
        throw StructureViolationError("Schur complement needs the first row equal to the first column");
    return detail::schur_complement_general(m);
}

// Checks the two block identities behind the Schur complement:
//   E M E^T = diag(a, M/a)   with E = [[1, 0], [a^-1(-b), I]], and
//   [[1, 0], [a^-1 b, I]] * E = I.
inline bool verify_schur_identity(const Matrix& m) {
    const Semiring& s = *m.semiring();
    const BlockView bv = block_split(m);
    if (!(bv.row == bv.col))
        throw StructureViolationError("Schur identity needs the first row equal to the first column");
    auto [ainv, neg] = detail::schur_ingredients(m);
    const std::size_t n = m.rows();

    Matrix e = Matrix::identity(m.semiring(), n);
    Matrix e_pos = Matrix::identity(m.semiring(), n);
    for (std::size_t i = 1; i < n; ++i) {
        e.set(i, 0, s.mul(ainv, neg[i - 1]));
        e_pos.set(i, 0, s.mul(ainv, bv.col[i - 1]));
    }

    const Matrix conjugated = e * m * transpose(e);
    Matrix expected(m.semiring(), n, n);
    expected.set(0, 0, bv.a);
    const Matrix sc = detail::schur_complement_general(m);
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = 1; j < n; ++j)
            expected.set(i, j, sc.at(i - 1, j - 1));

    return conjugated == expected && e_pos * e == Matrix::identity(m.semiring(), n);
}

enum class CholeskyStatus {
    Success,
    NotSymmetric,
    NotStronglyInvertible,
    PivotNotSquare,
    SubdiagonalNotNegatable,
};

inline const char* to_string(CholeskyStatus s) {
    switch (s) {
    case CholeskyStatus::Success: return "success";
    case CholeskyStatus::NotSymmetric: return "not_symmetric";
    case CholeskyStatus::NotStronglyInvertible: return "not_strongly_invertible";
    case CholeskyStatus::PivotNotSquare: return "pivot_not_square";
    case CholeskyStatus::SubdiagonalNotNegatable: return "subdiagonal_not_negatable";
    }
    return "?";
}

// Which hypotheses were verified for a factorization. The recursion itself
// only consumes the local conditions (each pivot an invertible square, each
// subdiagonal additively invertible); the theorem level additionally
// confirms strong invertibility and nonnegative numerical range up front.
enum class HypothesisLevel { Local, Theorem };

inline const char* to_string(HypothesisLevel l) {
    return l == HypothesisLevel::Theorem ? "theorem" : "local";
}

struct CholeskyResult {
    CholeskyStatus status = CholeskyStatus::Success;
    std::optional<Matrix> factor;    // lower-triangular L with L L^T = M
    std::vector<Elem> pivots;        // chosen square roots, one per step
    HypothesisLevel verified = HypothesisLevel::Local;
    std::size_t failing_k = 0;       // NotStronglyInvertible: 1-based block size
    std::size_t step = 0;            // PivotNotSquare / SubdiagonalNotNegatable
    std::optional<Elem> pivot;       // PivotNotSquare: the non-square pivot

    bool ok() const { return status == CholeskyStatus::Success; }
};

namespace detail {

// Smallest-index square root, preferring invertible roots. For an invertible
// argument every root is invertible, so the preference only matters in
// degenerate cases.
inline std::optional<Elem> choose_root(const Semiring& s, const Elem& a) {
    const auto roots = s.square_roots(a);
    if (roots.empty())
        return std::nullopt;
    for (const Elem& r : roots)
        if (s.is_unit(r))
            return r;
    return roots.front();
}

} // namespace detail

// Cholesky construction over the shrinking trailing block: pick a square
// root k of the pivot, divide the subdiagonal by k, continue on the Schur
// complement. Requesting HypothesisLevel::Theorem verifies strong
// invertibility and nonnegative numerical range first and records whether
// both held; the factorization itself is the same either way.
inline CholeskyResult cholesky(const Matrix& m, HypothesisLevel request = HypothesisLevel::Local) {
    if (!m.square())
        throw ShapeError("Cholesky needs a square matrix");
    CholeskyResult result;
    if (!is_symmetric(m)) {
        result.status = CholeskyStatus::NotSymmetric;
        return result;
    }
    const Semiring& s = *m.semiring();
    if (request == HypothesisLevel::Theorem) {
        const auto si = is_strongly_invertible(m);
        if (!si.ok) {
            result.status = CholeskyStatus::NotStronglyInvertible;
            result.failing_k = si.failing_k;
            return result;
        }
        result.verified = has_nonneg_numerical_range(m).yes() ? HypothesisLevel::Theorem
                                                              : HypothesisLevel::Local;
    }

    const std::size_t n = m.rows();
    Matrix l(m.semiring(), n, n);
    Matrix work = m;
    for (std::size_t step = 0;; ++step) {
        const std::size_t size = n - step;
        const Elem a = work.at(0, 0);
        if (size == 1) {
            // Base case: any square root completes the factor.
            const auto k = detail::choose_root(s, a);
            if (!k) {
                result.status = CholeskyStatus::PivotNotSquare;
                result.step = step;
                result.pivot = a;
                return result;
            }
            l.set(step, step, *k);
            result.pivots.push_back(*k);
            break;
        }
        if (!s.is_unit(a)) {
            // Every leading block up to this step is invertible, so this is
            // the first failing one.
            result.status = CholeskyStatus::NotStronglyInvertible;
            result.failing_k = step + 1;
            return result;
        }
        if (!s.is_square(a)) {
            result.status = CholeskyStatus::PivotNotSquare;
            result.step = step;
            result.pivot = a;
            return result;
        }
        bool negatable = true;
        for (std::size_t i = 1; i < size && negatable; ++i)
            negatable = s.is_add_invertible(work.at(i, 0));
        if (!negatable) {
            result.status = CholeskyStatus::SubdiagonalNotNegatable;
            result.step = step;
            return result;
        }
        const Elem k = *detail::choose_root(s, a);
        const Elem kinv = *s.inverse(k);
        l.set(step, step, k);
        for (std::size_t i = 1; i < size; ++i)
            l.set(step + i, step, s.mul(kinv, work.at(i, 0)));
        result.pivots.push_back(k);
        work = schur_complement(work);
    }
    result.factor = std::move(l);
    return result;
}

// All lower-triangular L with L L^T = M, by exhaustive enumeration of the
// q^(n(n+1)/2) candidate triangles in canonical order.
inline std::vector<Matrix> all_cholesky_factors(const Matrix& m) {
    if (!m.square())
        throw ShapeError("factor enumeration needs a square matrix");
    const Semiring& s = *m.semiring();
    if (!s.finite())
        throw NotEnumerableError("factor enumeration needs a finite semiring");
    const std::size_t n = m.rows();
    const std::size_t q = s.order();
    const auto positions = upper_triangle_positions(n);
    require_within_guard(pow_saturating(q, positions.size()));

    std::vector<Matrix> out;
    std::vector<std::size_t> digits(positions.size(), 0);
    do {
        Matrix l(m.semiring(), n, n);
        for (std::size_t p = 0; p < positions.size(); ++p) {
            // Mirror each upper-triangle position below the diagonal.
            const auto [i, j] = positions[p];
            l.set(j, i, Elem(digits[p]));
        }
        if (l * transpose(l) == m)
            out.push_back(std::move(l));
    } while (next_assignment(digits, q));
    return out;
}

// A diagonal matrix D with D^2 = I, stored by its diagonal.
struct DiagonalInvolution {
    Vec diagonal;

    Matrix matrix() const {
        Matrix d(diagonal.semiring(), diagonal.size(), diagonal.size());
        for (std::size_t i = 0; i < diagonal.size(); ++i)
            d.set(i, i, diagonal[i]);
        return d;
    }
};

// All diagonal involutions of size n: the n-fold product of the square
// roots of 1, in canonical order.
inline std::vector<DiagonalInvolution> diagonal_involutions(const SemiringPtr& s, std::size_t n) {
    if (!s->finite())
        throw NotEnumerableError("involution enumeration needs a finite semiring");
    const auto roots = s->square_roots(s->one());
    std::vector<DiagonalInvolution> out;
    std::vector<std::size_t> digits(n, 0);
    do {
        Vec d(s, n);
        for (std::size_t i = 0; i < n; ++i)
            d[i] = roots[digits[i]];
        out.push_back(DiagonalInvolution{std::move(d)});
    } while (next_assignment(digits, roots.size()));
    return out;
}

enum class LuStatus { Success, StronglyInvertibleRequired, SubdiagonalNotNegatable };

inline const char* to_string(LuStatus s) {
    switch (s) {
    case LuStatus::Success: return "success";
    case LuStatus::StronglyInvertibleRequired: return "strongly_invertible_required";
    case LuStatus::SubdiagonalNotNegatable: return "subdiagonal_not_negatable";
    }
    return "?";
}

struct LuResult {
    LuStatus status = LuStatus::Success;
    std::optional<Matrix> lower; // unit lower triangular
    std::optional<Matrix> upper; // upper triangular with invertible diagonal
    std::size_t failing_k = 0;   // StronglyInvertibleRequired
    std::size_t step = 0;        // SubdiagonalNotNegatable

    bool ok() const { return status == LuStatus::Success; }
};

// LU decomposition of a strongly invertible matrix via the recursive Schur
// construction; no symmetry needed. The subdiagonal is always additively
// invertible for strongly invertible input, so SubdiagonalNotNegatable can
// only surface if that guarantee is broken.
inline LuResult lu(const Matrix& m) {
    if (!m.square())
        throw ShapeError("LU needs a square matrix");
    const auto si = is_strongly_invertible(m);
    if (!si.ok) {
        LuResult r;
        r.status = LuStatus::StronglyInvertibleRequired;
        r.failing_k = si.failing_k;
        return r;
    }
    const Semiring& s = *m.semiring();
    const std::size_t n = m.rows();
    Matrix lower = Matrix::identity(m.semiring(), n);
    Matrix upper(m.semiring(), n, n);
    Matrix work = m;
    for (std::size_t step = 0;; ++step) {
        const std::size_t size = n - step;
        upper.set(step, step, work.at(0, 0));
        if (size == 1)
            break;
        const Elem ainv = *s.inverse(work.at(0, 0));
        for (std::size_t j = 1; j < size; ++j)
            upper.set(step, step + j, work.at(0, j));
        for (std::size_t i = 1; i < size; ++i) {
            if (!s.is_add_invertible(work.at(i, 0))) {
                LuResult r;
                r.status = LuStatus::SubdiagonalNotNegatable;
                r.step = step;
                return r;
            }
            lower.set(step + i, step, s.mul(ainv, work.at(i, 0)));
        }
        work = detail::schur_complement_general(work);
    }
    LuResult r;
    r.lower = std::move(lower);
    r.upper = std::move(upper);
    return r;
}

} // namespace semla
