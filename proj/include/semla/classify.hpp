#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semla/enumerate.hpp"
#include "semla/factorization.hpp"
#include "semla/matrix.hpp"
#include "semla/numerical_range.hpp"

namespace semla {

// A Gram decomposition M = sum over the multiset of v v^T; the multiset is
// the column list of a witness B with B B^T = M.
struct GramWitness {
    std::vector<std::pair<Vec, std::uint64_t>> generators; // vector, multiplicity

    Matrix resum() const {
        const SemiringPtr& s = generators.front().first.semiring();
        const std::size_t n = generators.front().first.size();
        const Semiring& ring = *s;
        Matrix acc(s, n, n);
        for (const auto& [v, count] : generators)
            for (std::uint64_t c = 0; c < count; ++c)
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        acc.set(i, j, ring.add(acc.at(i, j), ring.mul(v[i], v[j])));
        return acc;
    }
};

// Additive closure of the outer squares { v v^T : v in S^n } inside the
// symmetric matrices, computed once as a reachability fixpoint over the
// base-q encoding of the upper triangle. Membership answers positive
// semidefiniteness exactly; predecessors allow witness reconstruction.
class PsdClosure {
public:
    PsdClosure(SemiringPtr s, std::size_t n) : s_(std::move(s)), n_(n) {
        if (!s_->finite())
            throw NotEnumerableError("the PSD closure needs a finite semiring");
        const std::size_t q = s_->order();
        positions_ = upper_triangle_positions(n);
        state_count_ = pow_saturating(q, positions_.size());
        require_within_guard(state_count_);
        weights_.resize(positions_.size());
        std::uint64_t w = 1;
        for (std::size_t p = 0; p < positions_.size(); ++p, w *= q)
            weights_[p] = w;

        // Generators v v^T in canonical order of v.
        std::vector<std::size_t> digits(n, 0);
        do {
            Vec v(s_, n);
            for (std::size_t i = 0; i < n; ++i)
                v[i] = Elem(digits[i]);
            Matrix outer(s_, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    outer.set(i, j, s_->mul(v[i], v[j]));
            generators_.emplace_back(std::move(v), encode(outer));
        } while (next_assignment(digits, q));

        reached_.assign(state_count_, false);
        std::deque<std::uint64_t> frontier;
        for (std::size_t g = 0; g < generators_.size(); ++g) {
            const std::uint64_t key = generators_[g].second;
            if (!reached_[key]) {
                reached_[key] = true;
                parent_.emplace(key, Step{kNoParent, static_cast<std::uint32_t>(g)});
                frontier.push_back(key);
            }
        }
        while (!frontier.empty()) {
            const std::uint64_t cur = frontier.front();
            frontier.pop_front();
            const auto digits_cur = decode_digits(cur);
            for (std::size_t g = 0; g < generators_.size(); ++g) {
                const std::uint64_t next = add_states(digits_cur, generators_[g].second);
                if (!reached_[next]) {
                    reached_[next] = true;
                    parent_.emplace(next, Step{cur, static_cast<std::uint32_t>(g)});
                    frontier.push_back(next);
                }
            }
        }
    }

    const SemiringPtr& semiring() const { return s_; }
    std::size_t size() const { return n_; }

    std::uint64_t reached_count() const {
        std::uint64_t c = 0;
        for (bool b : reached_)
            c += b ? 1 : 0;
        return c;
    }

    bool contains(const Matrix& m) const {
        check_input(m);
        return reached_[encode(m)];
    }

    // Walks the predecessor chain back to a generator and aggregates the
    // multiset of generating vectors.
    GramWitness witness(const Matrix& m) const {
        check_input(m);
        std::uint64_t key = encode(m);
        if (!reached_[key])
            throw Error("witness requested for a matrix outside the PSD closure");
        std::map<std::uint32_t, std::uint64_t> counts;
        for (;;) {
            const Step step = parent_.at(key);
            ++counts[step.generator];
            if (step.from == kNoParent)
                break;
            key = step.from;
        }
        GramWitness w;
        for (const auto& [g, c] : counts)
            w.generators.emplace_back(generators_[g].first, c);
        return w;
    }

private:
    struct Step {
        std::uint64_t from;
        std::uint32_t generator;
    };
    static constexpr std::uint64_t kNoParent = ~std::uint64_t{0};

    void check_input(const Matrix& m) const {
        if (!same_semiring(m.semiring(), s_) || m.rows() != n_ || m.cols() != n_)
            throw SemiringMismatchError("matrix does not match this closure's semiring/size");
        if (!is_symmetric(m))
            throw ShapeError("the PSD closure only contains symmetric matrices");
    }

    std::uint64_t encode(const Matrix& m) const {
        std::uint64_t key = 0;
        for (std::size_t p = 0; p < positions_.size(); ++p)
            key += weights_[p] * s_->index(m.at(positions_[p].first, positions_[p].second));
        return key;
    }

    std::vector<std::size_t> decode_digits(std::uint64_t key) const {
        const std::size_t q = s_->order();
        std::vector<std::size_t> digits(positions_.size());
        for (std::size_t p = 0; p < positions_.size(); ++p) {
            digits[p] = key % q;
            key /= q;
        }
        return digits;
    }

    std::uint64_t add_states(const std::vector<std::size_t>& lhs_digits, std::uint64_t rhs) const {
        const std::size_t q = s_->order();
        const auto& add = s_->tables().add;
        std::uint64_t key = 0;
        for (std::size_t p = 0; p < positions_.size(); ++p) {
            const std::size_t rd = rhs % q;
            rhs /= q;
            key += weights_[p] * add[lhs_digits[p]][rd];
        }
        return key;
    }

    SemiringPtr s_;
    std::size_t n_;
    std::vector<std::pair<std::size_t, std::size_t>> positions_;
    std::vector<std::uint64_t> weights_;
    std::uint64_t state_count_ = 0;
    std::vector<std::pair<Vec, std::uint64_t>> generators_;
    std::vector<bool> reached_;
    std::unordered_map<std::uint64_t, Step> parent_;
};

struct PsdReport {
    Verdict verdict = Verdict::Unknown;
    std::optional<GramWitness> witness;

    bool yes() const { return verdict == Verdict::Yes; }
};

// Positive semidefiniteness of a symmetric matrix: membership in the
// additive closure of outer squares. Exact over finite semirings; Unknown
// over the naturals.
inline PsdReport is_positive_semidefinite(const Matrix& m) {
    if (!m.square() || !is_symmetric(m))
        throw ShapeError("positive semidefiniteness is defined for symmetric matrices");
    if (!m.semiring()->finite())
        return {Verdict::Unknown, std::nullopt};
    PsdClosure closure(m.semiring(), m.rows());
    if (!closure.contains(m))
        return {Verdict::No, std::nullopt};
    return {Verdict::Yes, closure.witness(m)};
}

// Q(S) + Q(S) subset of Q(S). Exhaustive over finite semirings; for the
// naturals the answer is a fixed fact (1 + 1 = 2 is not a square).
inline bool q_closed(const Semiring& s) {
    if (!s.finite())
        return false;
    const auto& squares = s.derived().squares;
    for (std::size_t a : squares)
        for (std::size_t b : squares)
            if (!s.is_square(s.add(Elem(a), Elem(b))))
                return false;
    return true;
}

struct EquivalenceViolation {
    Matrix matrix;
    bool si_and_nnr;
    bool si_lower_factor;
    bool si_and_psd;
};

struct EquivalenceReport {
    std::uint64_t checked = 0;
    std::vector<EquivalenceViolation> violations;

    bool ok() const { return violations.empty(); }
};

// For every symmetric n x n matrix over a semiring with additively closed
// squares, checks that these three agree:
//  (1) strongly invertible with nonnegative numerical range,
//  (2) some strongly invertible lower-triangular L has L L^T = M
//      (decided by exhaustive factor enumeration, not by the algorithm),
//  (3) strongly invertible and positive semidefinite.
inline EquivalenceReport corollary_equivalence_check(const SemiringPtr& s, std::size_t n) {
    if (!s->finite())
        throw NotEnumerableError("the equivalence check needs a finite semiring");
    if (!q_closed(*s))
        throw HypothesisError("equivalence check requires Q(S) + Q(S) within Q(S); " +
                              s->uri() + " does not satisfy it");
    const std::size_t q = s->order();
    const auto positions = upper_triangle_positions(n);
    require_within_guard(pow_saturating(q, positions.size()));

    PsdClosure closure(s, n);
    EquivalenceReport report;
    std::vector<std::size_t> digits(positions.size(), 0);
    do {
        Matrix m(s, n, n);
        for (std::size_t p = 0; p < positions.size(); ++p) {
            const auto [i, j] = positions[p];
            m.set(i, j, Elem(digits[p]));
            m.set(j, i, Elem(digits[p]));
        }
        ++report.checked;
        const bool si = is_strongly_invertible(m).ok;
        const bool c1 = si && has_nonneg_numerical_range(m).yes();
        bool c2 = false;
        for (const Matrix& l : all_cholesky_factors(m))
            if (is_strongly_invertible(l).ok) {
                c2 = true;
                break;
            }
        const bool c3 = si && closure.contains(m);
        if (c1 != c2 || c2 != c3)
            report.violations.push_back({m, c1, c2, c3});
    } while (next_assignment(digits, q));
    return report;
}

struct StrongInvertibilityVerdict {
    bool value = false;
    std::size_t failing_k = 0;
};

struct ClassificationReport {
    bool symmetric = false;
    bool invertible = false;
    StrongInvertibilityVerdict strongly_invertible;
    NnrReport nnr;
    PsdReport psd;
    bool q_closed_semiring = false;
};

// One-stop structural and semantic classification of a square matrix.
inline ClassificationReport classify(const Matrix& m, std::uint64_t nat_bound = 3) {
    if (!m.square())
        throw ShapeError("classification needs a square matrix");
    ClassificationReport r;
    r.symmetric = is_symmetric(m);
    r.invertible = invert(m).ok();
    const auto si = is_strongly_invertible(m);
    r.strongly_invertible = {si.ok, si.failing_k};
    r.nnr = has_nonneg_numerical_range(m, nat_bound);
    if (!r.symmetric) {
        // B B^T is always symmetric, so an asymmetric matrix cannot be PSD.
        r.psd = {Verdict::No, std::nullopt};
    } else if (!m.semiring()->finite()) {
        r.psd = {Verdict::Unknown, std::nullopt};
    } else {
        try {
            r.psd = is_positive_semidefinite(m);
        } catch (const SearchTooLargeError&) {
            r.psd = {Verdict::Unknown, std::nullopt};
        }
    }
    r.q_closed_semiring = q_closed(*m.semiring());
    return r;
}

} // namespace semla
