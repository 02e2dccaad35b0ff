#include <catch2/catch_amalgamated.hpp>

#include "semla/builders.hpp"
#include "semla/solve.hpp"

#include "test_support.hpp"

using namespace semla;
using testsup::mat;
using testsup::vec;

TEST_CASE("forward substitution worked examples") {
    const auto z6 = make_zn(6);
    SECTION("y2 = 0 + (-2)*1 = 4 over Z6") {
        const Matrix l = mat(z6, {{1, 0}, {2, 1}});
        CHECK(forward_substitute(l, vec(z6, {1, 0})) == vec(z6, {1, 4}));
    }
    SECTION("the identity is a no-op") {
        CHECK(forward_substitute(Matrix::identity(z6, 3), vec(z6, {1, 5, 2})) ==
              vec(z6, {1, 5, 2}));
    }
    SECTION("self-inverse diagonal over Z2[x]/(x^3)") {
        const auto s = make_z2x_mod_x3();
        const Elem one_x2 = *s->parse_element("1+x^2");
        const Matrix l = Matrix::from_rows(s, {{s->one(), s->zero()}, {s->zero(), one_x2}});
        const Vec c(s, {s->one(), s->one()});
        const Vec expected(s, {s->one(), one_x2});
        CHECK(forward_substitute(l, c) == expected);
    }
}

TEST_CASE("backward substitution worked examples") {
    const auto z6 = make_zn(6);
    SECTION("y1 = 1 + (-2)*4 = 5 over Z6") {
        const Matrix u = mat(z6, {{1, 2}, {0, 1}});
        CHECK(backward_substitute(u, vec(z6, {1, 4})) == vec(z6, {5, 4}));
    }
    SECTION("identity") {
        CHECK(backward_substitute(Matrix::identity(z6, 2), vec(z6, {3, 4})) == vec(z6, {3, 4}));
    }
    SECTION("scalar system with 5^-1 = 5") {
        CHECK(backward_substitute(mat(z6, {{5}}), vec(z6, {1})) == vec(z6, {5}));
    }
}

TEST_CASE("substitution refuses structurally unsound factors") {
    const auto z6 = make_zn(6);
    CHECK_THROWS_AS(forward_substitute(mat(z6, {{2, 0}, {1, 1}}), vec(z6, {1, 1})),
                    StructureViolationError);
    const auto b = make_boolean();
    // 1 is not additively invertible in the boolean semiring.
    CHECK_THROWS_AS(forward_substitute(mat(b, {{1, 0}, {1, 1}}), vec(b, {1, 1})),
                    StructureViolationError);
    CHECK_THROWS_AS(backward_substitute(mat(b, {{1, 1}, {0, 1}}), vec(b, {1, 1})),
                    StructureViolationError);
    CHECK_THROWS_AS(forward_substitute(mat(z6, {{1, 0}, {1, 1}}), vec(z6, {1})), ShapeError);
}

TEST_CASE("solve worked examples") {
    const auto z6 = make_zn(6);
    SECTION("M y = (1,0) over Z6") {
        const Matrix m = mat(z6, {{1, 2}, {2, 5}});
        const auto r = solve_spd(m, vec(z6, {1, 0}));
        REQUIRE(r.ok());
        CHECK(*r.solution == vec(z6, {5, 4}));
        CHECK(r.residual_verified);
        CHECK(m * *r.solution == vec(z6, {1, 0}));
        // Agreement with the inverse route.
        CHECK(*invert(m).inverse * vec(z6, {1, 0}) == *r.solution);
    }
    SECTION("identity returns the right-hand side") {
        const auto r = solve_spd(Matrix::identity(z6, 2), vec(z6, {3, 5}));
        REQUIRE(r.ok());
        CHECK(*r.solution == vec(z6, {3, 5}));
    }
    SECTION("diagonal solve over Z2[x]/(x^3)") {
        const auto s = make_z2x_mod_x3();
        const Elem one_x2 = *s->parse_element("1+x^2");
        const Matrix m = Matrix::from_rows(s, {{s->one(), s->zero()}, {s->zero(), one_x2}});
        const Vec c(s, {s->zero(), s->one()});
        const auto r = solve_spd(m, c);
        REQUIRE(r.ok());
        CHECK(*r.solution == Vec(s, {s->zero(), one_x2}));
    }
    SECTION("factorization failures propagate") {
        const auto r = solve_spd(mat(z6, {{5, 2}, {2, 1}}), vec(z6, {1, 0}));
        CHECK_FALSE(r.ok());
        CHECK(r.factorization.status == CholeskyStatus::PivotNotSquare);
    }
    SECTION("a degenerate factor with a non-unit diagonal is refused") {
        // diag(1, 3) factors as itself, but 3 is not a unit in Z6.
        const Matrix m = mat(z6, {{1, 0}, {0, 3}});
        REQUIRE(cholesky(m).ok());
        CHECK_THROWS_AS(solve_spd(m, vec(z6, {1, 1})), StructureViolationError);
    }
}

TEST_CASE("solving through the factor matches the inverse for all right-hand sides",
          "[property]") {
    for (const auto& s : testsup::builtin_finite_semirings()) {
        INFO(s->uri());
        bool all_ok = true;
        const auto rhs = testsup::all_vectors(s, 2);
        for (const Matrix& m : testsup::all_symmetric(s, 2)) {
            const auto ch = cholesky(m);
            if (!ch.ok())
                continue;
            bool unit_pivots = true;
            for (const Elem& p : ch.pivots)
                unit_pivots = unit_pivots && s->is_unit(p);
            if (!unit_pivots)
                continue;
            const auto inv = invert(m);
            all_ok = all_ok && inv.ok();
            for (const Vec& c : rhs) {
                const auto r = solve_spd(m, c);
                all_ok = all_ok && r.ok() && m * *r.solution == c;
                if (inv.ok())
                    all_ok = all_ok && *inv.inverse * c == *r.solution;
            }
        }
        CHECK(all_ok);
    }
}
