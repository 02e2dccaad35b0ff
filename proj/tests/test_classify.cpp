#include <catch2/catch_amalgamated.hpp>

#include "semla/builders.hpp"
#include "semla/classify.hpp"
#include "semla/factorization.hpp"

#include "test_support.hpp"

using namespace semla;
using testsup::mat;

namespace {

Matrix z2xb_example() {
    const auto s = make_product(make_zn(2), make_boolean());
    const Elem e10 = *s->parse_element("(1,0)");
    const Elem e01 = *s->parse_element("(0,1)");
    return Matrix::from_rows(s, {{e10, e01}, {e01, e10}});
}

} // namespace

TEST_CASE("numerical range worked examples") {
    SECTION("Q(S) = S makes every matrix pass over Z2 x B") {
        CHECK(has_nonneg_numerical_range(z2xb_example()).verdict == Verdict::Yes);
    }
    SECTION("the identity over the naturals fails at (1,1)") {
        const auto nat = make_naturals();
        const auto r = has_nonneg_numerical_range(Matrix::identity(nat, 2));
        REQUIRE(r.verdict == Verdict::No);
        CHECK(*r.witness == testsup::vec(nat, {1, 1}));
        CHECK(*r.value == 2);
    }
    SECTION("first counter-witness in canonical order over Z6") {
        const auto z6 = make_zn(6);
        const auto r = has_nonneg_numerical_range(mat(z6, {{1, 2}, {2, 5}}));
        REQUIRE(r.verdict == Verdict::No);
        CHECK(*r.witness == testsup::vec(z6, {0, 1}));
        CHECK(*r.value == 5);
    }
    SECTION("a clean bounded pass over the naturals stays Unknown") {
        const auto nat = make_naturals();
        const Matrix psd_like = mat(nat, {{1, 1}, {1, 1}});
        // (x+y)^2 is always a square, but the bounded search cannot prove it.
        const auto r = has_nonneg_numerical_range(psd_like, 3);
        CHECK(r.verdict == Verdict::Unknown);
        CHECK(r.bound == 3);
    }
}

TEST_CASE("numerical-range witnesses recompute to non-squares", "[property]") {
    for (const auto& s : testsup::builtin_finite_semirings()) {
        INFO(s->uri());
        bool all_ok = true;
        for (const Matrix& m : testsup::all_symmetric(s, 2)) {
            const auto r = has_nonneg_numerical_range(m);
            if (r.verdict != Verdict::No)
                continue;
            const Elem v = quadratic_form(m, *r.witness);
            all_ok = all_ok && v == *r.value && !s->is_square(v);
        }
        CHECK(all_ok);
    }
}

TEST_CASE("positive semidefiniteness worked examples") {
    const auto z6 = make_zn(6);
    SECTION("the Z6 example is PSD with a verifiable witness") {
        const Matrix m = mat(z6, {{5, 2}, {2, 1}});
        // Direct exhibit, independent of the closure: B = [[1,2],[0,1]].
        const Matrix b = mat(z6, {{1, 2}, {0, 1}});
        REQUIRE(b * transpose(b) == m);
        const auto r = is_positive_semidefinite(m);
        REQUIRE(r.verdict == Verdict::Yes);
        CHECK(r.witness->resum() == m);
    }
    SECTION("the Z2 x B example is not PSD") {
        CHECK(is_positive_semidefinite(z2xb_example()).verdict == Verdict::No);
    }
    SECTION("identities are PSD everywhere") {
        for (const auto& s : testsup::builtin_finite_semirings()) {
            INFO(s->uri());
            CHECK(is_positive_semidefinite(Matrix::identity(s, 2)).verdict == Verdict::Yes);
        }
    }
    SECTION("PSD of an asymmetric matrix is a shape error") {
        CHECK_THROWS_AS(is_positive_semidefinite(mat(z6, {{1, 2}, {3, 1}})), ShapeError);
    }
    SECTION("the naturals stay Unknown") {
        CHECK(is_positive_semidefinite(Matrix::identity(make_naturals(), 2)).verdict ==
              Verdict::Unknown);
    }
}

TEST_CASE("PSD witnesses resum to the matrix they certify", "[property]") {
    for (const auto& s : testsup::builtin_finite_semirings()) {
        if (s->order() > 4)
            continue;
        INFO(s->uri());
        PsdClosure closure(s, 2);
        bool all_ok = true;
        for (const Matrix& m : testsup::all_symmetric(s, 2)) {
            if (!closure.contains(m))
                continue;
            all_ok = all_ok && closure.witness(m).resum() == m;
        }
        CHECK(all_ok);
    }
}

TEST_CASE("the closure is guarded") {
    CHECK_THROWS_AS(PsdClosure(make_zn(40), 5), SearchTooLargeError);
}

TEST_CASE("q-closedness of the built-ins") {
    CHECK(q_closed(*make_boolean()));
    CHECK(q_closed(*make_zn(2)));
    CHECK(q_closed(*make_z2x_mod_x3()));
    CHECK(q_closed(*make_chain_lattice(2)));
    CHECK_FALSE(q_closed(*make_zn(3)));
    CHECK_FALSE(q_closed(*make_zn(4)));
    CHECK_FALSE(q_closed(*make_zn(6)));
    // Q(S) = S for the product, so sums of squares stay squares.
    CHECK(q_closed(*make_product(make_zn(2), make_boolean())));
    // 1 + 1 = 2 is not a perfect square.
    CHECK_FALSE(q_closed(*make_naturals()));
}

TEST_CASE("corollary equivalence worked examples") {
    SECTION("no violations over the boolean semiring at n = 2") {
        const auto report = corollary_equivalence_check(make_boolean(), 2);
        CHECK(report.checked == 8);
        CHECK(report.ok());
    }
    SECTION("no violations over Z2 at n = 2") {
        CHECK(corollary_equivalence_check(make_zn(2), 2).ok());
    }
    SECTION("Z6 does not satisfy the hypothesis") {
        CHECK_THROWS_AS(corollary_equivalence_check(make_zn(6), 2), HypothesisError);
    }
}

TEST_CASE("PSD implies nonnegative numerical range over q-closed semirings", "[property]") {
    for (const auto& s : testsup::builtin_finite_semirings()) {
        if (s->order() > 4 || !q_closed(*s))
            continue;
        INFO(s->uri());
        PsdClosure closure(s, 2);
        bool all_ok = true;
        for (const Matrix& m : testsup::all_symmetric(s, 2))
            if (closure.contains(m))
                all_ok = all_ok && has_nonneg_numerical_range(m).yes();
        CHECK(all_ok);
    }
}

TEST_CASE("a successful factorization certifies positive semidefiniteness", "[property]") {
    for (const auto& s : testsup::builtin_finite_semirings()) {
        INFO(s->uri());
        PsdClosure closure(s, 2);
        bool all_ok = true;
        for (const Matrix& m : testsup::all_symmetric(s, 2))
            if (cholesky(m).ok())
                all_ok = all_ok && closure.contains(m);
        CHECK(all_ok);
    }
}

TEST_CASE("the two non-coincidence examples separate NNR from PSD") {
    // NNR yes, PSD no:
    const Matrix m = z2xb_example();
    CHECK(has_nonneg_numerical_range(m).yes());
    CHECK(is_positive_semidefinite(m).verdict == Verdict::No);
    // PSD yes (B = I), NNR no:
    const auto nat = make_naturals();
    const Matrix id = Matrix::identity(nat, 2);
    CHECK(id * transpose(id) == id);
    CHECK(has_nonneg_numerical_range(id).verdict == Verdict::No);
}

TEST_CASE("classification report bundles the deciders") {
    const auto z6 = make_zn(6);
    SECTION("the Z6 headline example") {
        const auto r = classify(mat(z6, {{5, 2}, {2, 1}}));
        CHECK(r.symmetric);
        CHECK(r.invertible);
        CHECK(r.strongly_invertible.value);
        CHECK(r.nnr.verdict == Verdict::No);
        CHECK(r.psd.verdict == Verdict::Yes);
        CHECK_FALSE(r.q_closed_semiring);
    }
    SECTION("asymmetric matrices are never PSD") {
        const auto r = classify(mat(z6, {{1, 2}, {3, 1}}));
        CHECK_FALSE(r.symmetric);
        CHECK(r.psd.verdict == Verdict::No);
    }
    SECTION("naturals identity") {
        const auto r = classify(Matrix::identity(make_naturals(), 2));
        CHECK(r.symmetric);
        CHECK(r.invertible);
        CHECK(r.strongly_invertible.value);
        CHECK(r.nnr.verdict == Verdict::No);
        CHECK(r.psd.verdict == Verdict::Unknown);
        CHECK_FALSE(r.q_closed_semiring);
    }
}
