#include <catch2/catch_amalgamated.hpp>

#include "semla/builders.hpp"
#include "semla/search.hpp"

#include "test_support.hpp"

using namespace semla;
using testsup::mat;

namespace {

std::vector<Matrix> collect(const SemiringPtr& s, std::size_t n, const std::string& predicates,
                            std::uint64_t limit = 0) {
    std::vector<Matrix> out;
    search_symmetric(s, n, parse_predicates(predicates), [&](const Matrix& m) {
        out.push_back(m);
        return limit == 0 || out.size() < limit;
    });
    return out;
}

} // namespace

TEST_CASE("predicate parsing") {
    const auto lits = parse_predicates("strongly-invertible,nnr,!cholesky");
    REQUIRE(lits.size() == 3);
    CHECK(lits[0].predicate == Predicate::StronglyInvertible);
    CHECK_FALSE(lits[0].negated);
    CHECK(lits[1].predicate == Predicate::Nnr);
    CHECK(lits[2].predicate == Predicate::Cholesky);
    CHECK(lits[2].negated);

    CHECK(parse_predicates("not-psd & invertible").size() == 2);
    CHECK_THROWS_AS(parse_predicates("fancy"), ParseError);
    CHECK_THROWS_AS(parse_predicates(""), ParseError);
}

TEST_CASE("theorem-consistent searches come back empty") {
    for (const auto& s : {make_boolean(), make_zn(2), make_zn(6)}) {
        INFO(s->uri());
        CHECK(collect(s, 2, "strongly-invertible,nnr,!cholesky").empty());
    }
}

TEST_CASE("the Z6 counterexample pattern is rediscovered") {
    const auto z6 = make_zn(6);
    const auto matches = collect(z6, 2, "strongly-invertible,psd,!cholesky");
    REQUIRE_FALSE(matches.empty());
    const Matrix f1 = mat(z6, {{5, 2}, {2, 1}});
    bool contains_f1 = false;
    for (const Matrix& m : matches)
        contains_f1 = contains_f1 || m == f1;
    CHECK(contains_f1);
    // Every match shares the failure pattern: either the corner is the
    // non-square 5, or the Schur complement is the non-square 5.
    for (const Matrix& m : matches) {
        const bool corner5 = m.at(0, 0) == 5;
        const bool schur5 = m.at(0, 0) == 1 && schur_complement(m) == mat(z6, {{5}});
        CHECK((corner5 || schur5));
    }
}

TEST_CASE("the Z2 x B example is found by an invertibility search") {
    const auto s = make_product(make_zn(2), make_boolean());
    const auto matches = collect(s, 2, "invertible,nnr,!cholesky");
    const Elem e10 = *s->parse_element("(1,0)");
    const Elem e01 = *s->parse_element("(0,1)");
    const Matrix paper_m = Matrix::from_rows(s, {{e10, e01}, {e01, e10}});
    bool found = false;
    for (const Matrix& m : matches)
        found = found || m == paper_m;
    CHECK(found);
}

TEST_CASE("matches stream in canonical order and respect limits") {
    const auto b = make_boolean();
    const auto all = collect(b, 2, "psd");
    REQUIRE(all.size() >= 2);
    const auto limited = collect(b, 2, "psd", 2);
    REQUIRE(limited.size() == 2);
    CHECK(limited[0] == all[0]);
    CHECK(limited[1] == all[1]);

    // Canonical order: upper-triangle digits as an odometer. The zero
    // matrix is PSD (outer square of the zero vector) and comes first.
    CHECK(all.front() == mat(b, {{0, 0}, {0, 0}}));
}

TEST_CASE("search is deterministic") {
    const auto z6 = make_zn(6);
    const auto a = collect(z6, 2, "strongly-invertible,psd,!cholesky");
    const auto b = collect(z6, 2, "strongly-invertible,psd,!cholesky");
    CHECK(a == b);
}

TEST_CASE("oversized searches are refused") {
    CHECK_THROWS_AS(collect(make_zn(40), 5, "invertible"), SearchTooLargeError);
    CHECK_THROWS_AS(
        search_symmetric(make_naturals(), 2, parse_predicates("invertible"),
                         [](const Matrix&) { return true; }),
        NotEnumerableError);
}
