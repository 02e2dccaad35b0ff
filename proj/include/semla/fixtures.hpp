#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "semla/builders.hpp"
#include "semla/classify.hpp"
#include "semla/factorization.hpp"
#include "semla/matrix.hpp"
#include "semla/numerical_range.hpp"

namespace semla {

struct FixtureResult {
    std::string id;
    std::string title;
    bool passed = true;
    std::vector<std::string> notes; // one entry per failed expectation

    void expect(bool condition, const std::string& what) {
        if (!condition) {
            passed = false;
            notes.push_back(what);
        }
    }
};

namespace detail {

inline std::vector<std::size_t> flatten(const Matrix& m) {
    std::vector<std::size_t> key;
    key.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            key.push_back(m.semiring()->index(m.at(i, j)));
    return key;
}

inline bool equal_as_sets(std::vector<Matrix> a, std::vector<Matrix> b) {
    auto cmp = [](const Matrix& x, const Matrix& y) { return flatten(x) < flatten(y); };
    std::sort(a.begin(), a.end(), cmp);
    std::sort(b.begin(), b.end(), cmp);
    return a == b;
}

} // namespace detail

// F1: the Z_6 matrix [[5,2],[2,1]] is strongly invertible and positive
// semidefinite, yet no lower-triangular factor exists (the pivot 5 is not
// a square).
inline FixtureResult run_fixture_f1(const SemiringPtr& z6) {
    FixtureResult r{"F1", "Z6: strongly invertible + PSD without a Cholesky factor"};
    const Matrix m = Matrix::from_rows(z6, {{Elem(5), Elem(2)}, {Elem(2), Elem(1)}});
    r.expect(is_strongly_invertible(m).ok, "expected strong invertibility");
    r.expect(is_positive_semidefinite(m).yes(), "expected a positive semidefinite verdict");
    const auto ch = cholesky(m);
    r.expect(ch.status == CholeskyStatus::PivotNotSquare, "expected PivotNotSquare");
    r.expect(ch.step == 0 && ch.pivot && *ch.pivot == 5, "expected pivot 5 at step 0");
    r.expect(all_cholesky_factors(m).empty(), "expected no lower-triangular factors");
    return r;
}

// F2: over Z_2 x B the matrix [[(1,0),(0,1)],[(0,1),(1,0)]] squares to the
// identity, is not strongly invertible, has a nonnegative numerical range,
// is not positive semidefinite and admits no lower-triangular factor.
inline FixtureResult run_fixture_f2() {
    FixtureResult r{"F2", "Z2xB: invertible but not strongly invertible, NNR without PSD"};
    const auto s = make_product(make_zn(2), make_boolean());
    const Elem e10 = *s->parse_element("(1,0)");
    const Elem e01 = *s->parse_element("(0,1)");
    const Matrix m = Matrix::from_rows(s, {{e10, e01}, {e01, e10}});
    r.expect(m * m == Matrix::identity(s, 2), "expected M^2 = I");
    r.expect(invert(m).ok(), "expected invertibility");
    const auto si = is_strongly_invertible(m);
    r.expect(!si.ok && si.failing_k == 1, "expected strong invertibility to fail at k = 1");
    r.expect(has_nonneg_numerical_range(m).yes(), "expected a nonnegative numerical range");
    r.expect(is_positive_semidefinite(m).verdict == Verdict::No, "expected PSD = no");
    r.expect(all_cholesky_factors(m).empty(), "expected no lower-triangular factors");
    return r;
}

// F3: over Z_2[x]/(x^3), Q(S) = {0, 1, x^2, 1+x^2}; diag(1, 1+x^2) factors;
// the full factor set is exactly {L D : D^2 = I} with per-entry involutions
// {1, 1+x^2}; and no factor has a nonnegative numerical range.
inline FixtureResult run_fixture_f3() {
    FixtureResult r{"F3", "Z2[x]/(x^3): factor ambiguity is exactly the involution class"};
    const auto s = make_z2x_mod_x3();
    std::vector<Elem> squares;
    for (std::size_t i : s->derived().squares)
        squares.emplace_back(i);
    const Elem one = *s->parse_element("1");
    const Elem x2 = *s->parse_element("x^2");
    const Elem one_x2 = *s->parse_element("1+x^2");
    r.expect(squares == std::vector<Elem>({s->zero(), one, x2, one_x2}),
             "expected Q(S) = {0, 1, x^2, 1+x^2}");

    const Matrix m = Matrix::from_rows(s, {{one, s->zero()}, {s->zero(), one_x2}});
    const auto ch = cholesky(m);
    r.expect(ch.ok(), "expected a successful factorization");
    if (!ch.ok())
        return r;
    r.expect(*ch.factor * transpose(*ch.factor) == m, "expected L L^T = M");

    const auto involutions = diagonal_involutions(s, 2);
    std::vector<Elem> diag_roots = s->square_roots(one);
    r.expect(diag_roots == std::vector<Elem>({one, one_x2}),
             "expected involution entries {1, 1+x^2}");
    r.expect(involutions.size() == 4, "expected 4 diagonal involutions");

    std::vector<Matrix> via_involutions;
    for (const auto& d : involutions)
        via_involutions.push_back(*ch.factor * d.matrix());
    const auto factors = all_cholesky_factors(m);
    r.expect(detail::equal_as_sets(factors, via_involutions),
             "expected the factor set to be {L D : D^2 = I}");
    for (const Matrix& f : factors)
        r.expect(has_nonneg_numerical_range(f).verdict == Verdict::No,
                 "expected every factor to fail the numerical-range test");
    return r;
}

// F4: the identity over the naturals is positive semidefinite (B = I is a
// witness) but x = (1,1) shows its numerical range is not nonnegative.
inline FixtureResult run_fixture_f4() {
    FixtureResult r{"F4", "naturals: PSD identity without nonnegative numerical range"};
    const auto nat = make_naturals();
    const Matrix id = Matrix::identity(nat, 2);
    r.expect(id * transpose(id) == id, "expected B = I to witness PSD");
    const auto nnr = has_nonneg_numerical_range(id);
    r.expect(nnr.verdict == Verdict::No, "expected a numerical-range counter-witness");
    if (nnr.verdict == Verdict::No) {
        const Vec expected_witness(nat, {Elem(1), Elem(1)});
        r.expect(*nnr.witness == expected_witness && *nnr.value == 2,
                 "expected witness (1,1) with value 2");
    }
    return r;
}

// F5: the three-way equivalence holds with zero violations over the
// q-closed built-ins B, Z_2 and Z_2[x]/(x^3) at n = 2.
inline FixtureResult run_fixture_f5() {
    FixtureResult r{"F5", "equivalence of NNR, factor existence and PSD at n = 2"};
    for (const auto& s : {make_boolean(), make_zn(2), make_z2x_mod_x3()}) {
        const auto report = corollary_equivalence_check(s, 2);
        r.expect(report.ok(), "expected zero violations over " + s->uri());
        r.expect(report.checked > 0, "expected a nonempty instance space over " + s->uri());
    }
    return r;
}

// The built-in reference fixtures, in order. The Z_6 semiring may be
// overridden to exercise the failure path.
inline std::vector<FixtureResult> run_reference_fixtures(const SemiringPtr& z6_override = nullptr) {
    std::vector<FixtureResult> out;
    out.push_back(run_fixture_f1(z6_override ? z6_override : make_zn(6)));
    out.push_back(run_fixture_f2());
    out.push_back(run_fixture_f3());
    out.push_back(run_fixture_f4());
    out.push_back(run_fixture_f5());
    return out;
}

} // namespace semla
