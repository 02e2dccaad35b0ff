#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semla/semiring.hpp"

namespace semla {

// Builders stay well below this order so that construction-time validation
// (cubic in the order) remains instant.
inline constexpr std::size_t kMaxBuilderOrder = 256;

inline SemiringPtr make_zn(std::size_t n) {
    if (n < 2 || n > kMaxBuilderOrder)
        throw MalformedTableError("zn order must be in [2, " +
                                  std::to_string(kMaxBuilderOrder) + "]");
    RawTables t;
    t.order = n;
    t.zero = 0;
    t.one = 1;
    t.add.assign(n, std::vector<std::size_t>(n));
    t.mul.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            t.add[a][b] = (a + b) % n;
            t.mul[a][b] = (a * b) % n;
        }
    return Semiring::from_tables(std::move(t), "zn:" + std::to_string(n));
}

// The binary Boolean semiring: {0,1} with 1+1 = 1.
inline SemiringPtr make_boolean() {
    RawTables t;
    t.order = 2;
    t.zero = 0;
    t.one = 1;
    t.add = {{0, 1}, {1, 1}};
    t.mul = {{0, 0}, {0, 1}};
    return Semiring::from_tables(std::move(t), "bool");
}

// Chain lattice on {0..k}: add = max, mul = min, zero = 0, one = k.
inline SemiringPtr make_chain_lattice(std::size_t k) {
    if (k < 1 || k + 1 > kMaxBuilderOrder)
        throw MalformedTableError("chain height must be in [1, " +
                                  std::to_string(kMaxBuilderOrder - 1) + "]");
    const std::size_t q = k + 1;
    RawTables t;
    t.order = q;
    t.zero = 0;
    t.one = k;
    t.add.assign(q, std::vector<std::size_t>(q));
    t.mul.assign(q, std::vector<std::size_t>(q));
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b) {
            t.add[a][b] = std::max(a, b);
            t.mul[a][b] = std::min(a, b);
        }
    return Semiring::from_tables(std::move(t), "chain:" + std::to_string(k));
}

// Componentwise product with lexicographic pairing: (i1, i2) -> i1*q2 + i2.
inline SemiringPtr make_product(const SemiringPtr& s1, const SemiringPtr& s2) {
    if (!s1 || !s2 || !s1->finite() || !s2->finite())
        throw NotEnumerableError("product requires two finite semirings");
    const RawTables& a = s1->tables();
    const RawTables& b = s2->tables();
    const std::size_t q1 = a.order, q2 = b.order, q = q1 * q2;
    if (q > kMaxBuilderOrder)
        throw MalformedTableError("product order " + std::to_string(q) +
                                  " exceeds the builder limit");
    RawTables t;
    t.order = q;
    t.zero = a.zero * q2 + b.zero;
    t.one = a.one * q2 + b.one;
    t.names.reserve(q);
    for (std::size_t i = 0; i < q1; ++i)
        for (std::size_t j = 0; j < q2; ++j)
            t.names.push_back("(" + a.names[i] + "," + b.names[j] + ")");
    t.add.assign(q, std::vector<std::size_t>(q));
    t.mul.assign(q, std::vector<std::size_t>(q));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j) {
            const std::size_t i1 = i / q2, i2 = i % q2;
            const std::size_t j1 = j / q2, j2 = j % q2;
            t.add[i][j] = a.add[i1][j1] * q2 + b.add[i2][j2];
            t.mul[i][j] = a.mul[i1][j1] * q2 + b.mul[i2][j2];
        }
    return Semiring::from_tables(std::move(t), "product:" + s1->uri() + "," + s2->uri());
}

// Z_2[x]/(x^3), materialized as the 8-element table. Element a + bx + cx^2
// has index a + 2b + 4c.
inline SemiringPtr make_z2x_mod_x3() {
    const std::size_t q = 8;
    auto coeff = [](std::size_t e) {
        return std::array<std::size_t, 3>{e & 1, (e >> 1) & 1, (e >> 2) & 1};
    };
    auto encode = [](std::array<std::size_t, 3> c) {
        return (c[0] & 1) | ((c[1] & 1) << 1) | ((c[2] & 1) << 2);
    };
    RawTables t;
    t.order = q;
    t.zero = 0;
    t.one = 1;
    t.add.assign(q, std::vector<std::size_t>(q));
    t.mul.assign(q, std::vector<std::size_t>(q));
    for (std::size_t e = 0; e < q; ++e)
        for (std::size_t f = 0; f < q; ++f) {
            auto u = coeff(e), v = coeff(f);
            t.add[e][f] = encode({u[0] ^ v[0], u[1] ^ v[1], u[2] ^ v[2]});
            // Polynomial product truncated at x^3, coefficients mod 2.
            std::size_t c0 = u[0] * v[0];
            std::size_t c1 = u[0] * v[1] + u[1] * v[0];
            std::size_t c2 = u[0] * v[2] + u[1] * v[1] + u[2] * v[0];
            t.mul[e][f] = encode({c0 & 1, c1 & 1, c2 & 1});
        }
    t.names.reserve(q);
    for (std::size_t e = 0; e < q; ++e) {
        auto c = coeff(e);
        std::string s;
        if (c[0]) s = "1";
        if (c[1]) s += (s.empty() ? "x" : "+x");
        if (c[2]) s += (s.empty() ? "x^2" : "+x^2");
        if (s.empty()) s = "0";
        t.names.push_back(s);
    }
    return Semiring::from_tables(std::move(t), "z2x3");
}

inline SemiringPtr make_naturals() { return Semiring::naturals(); }

// Resolves builder URIs: "zn:6", "bool", "product:zn:2,bool", "z2x3",
// "chain:2", "nat". Nested products are not supported.
inline SemiringPtr semiring_from_uri(const std::string& uri) {
    auto parse_count = [&](const std::string& text) -> std::size_t {
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
            throw ParseError("bad numeric parameter in semiring URI: " + uri);
        return static_cast<std::size_t>(std::stoull(text));
    };
    if (uri == "bool")
        return make_boolean();
    if (uri == "z2x3")
        return make_z2x_mod_x3();
    if (uri == "nat")
        return make_naturals();
    if (uri.rfind("zn:", 0) == 0)
        return make_zn(parse_count(uri.substr(3)));
    if (uri.rfind("chain:", 0) == 0)
        return make_chain_lattice(parse_count(uri.substr(6)));
    if (uri.rfind("product:", 0) == 0) {
        const std::string rest = uri.substr(8);
        const std::size_t comma = rest.find(',');
        if (comma == std::string::npos)
            throw ParseError("product URI needs two comma-separated components: " + uri);
        const std::string left = rest.substr(0, comma);
        const std::string right = rest.substr(comma + 1);
        if (left.rfind("product:", 0) == 0 || right.rfind("product:", 0) == 0)
            throw ParseError("nested product URIs are not supported: " + uri);
        return make_product(semiring_from_uri(left), semiring_from_uri(right));
    }
    throw ParseError("unknown semiring URI: " + uri);
}

} // namespace semla
