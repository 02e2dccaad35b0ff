#pragma once

#include <vector>

#include "semla/builders.hpp"
#include "semla/matrix.hpp"
#include "semla/semiring.hpp"

namespace testsup {

inline std::vector<semla::SemiringPtr> builtin_finite_semirings() {
    return {
        semla::make_boolean(),
        semla::make_zn(2),
        semla::make_zn(3),
        semla::make_zn(4),
        semla::make_zn(6),
        semla::make_product(semla::make_zn(2), semla::make_boolean()),
        semla::make_chain_lattice(2),
        semla::make_z2x_mod_x3(),
    };
}

inline semla::Matrix mat(const semla::SemiringPtr& s,
                         const std::vector<std::vector<long>>& rows) {
    std::vector<std::vector<semla::Elem>> data;
    for (const auto& row : rows) {
        std::vector<semla::Elem> r;
        for (long v : row)
            r.emplace_back(v);
        data.push_back(std::move(r));
    }
    return semla::Matrix::from_rows(s, data);
}

inline semla::Vec vec(const semla::SemiringPtr& s, const std::vector<long>& entries) {
    std::vector<semla::Elem> data;
    for (long v : entries)
        data.emplace_back(v);
    return semla::Vec(s, std::move(data));
}

// All symmetric n x n matrices over a finite semiring, canonical order.
inline std::vector<semla::Matrix> all_symmetric(const semla::SemiringPtr& s, std::size_t n) {
    const std::size_t q = s->order();
    const auto positions = semla::upper_triangle_positions(n);
    std::vector<semla::Matrix> out;
    std::vector<std::size_t> digits(positions.size(), 0);
    do {
        semla::Matrix m(s, n, n);
        for (std::size_t p = 0; p < positions.size(); ++p) {
            const auto [i, j] = positions[p];
            m.set(i, j, semla::Elem(digits[p]));
            m.set(j, i, semla::Elem(digits[p]));
        }
        out.push_back(std::move(m));
    } while (semla::next_assignment(digits, q));
    return out;
}

// All n x n matrices over a finite semiring (use only for tiny spaces).
inline std::vector<semla::Matrix> all_square(const semla::SemiringPtr& s, std::size_t n) {
    const std::size_t q = s->order();
    std::vector<semla::Matrix> out;
    std::vector<std::size_t> digits(n * n, 0);
    do {
        semla::Matrix m(s, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m.set(i, j, semla::Elem(digits[i * n + j]));
        out.push_back(std::move(m));
    } while (semla::next_assignment(digits, q));
    return out;
}

// All vectors in S^n, canonical order.
inline std::vector<semla::Vec> all_vectors(const semla::SemiringPtr& s, std::size_t n) {
    const std::size_t q = s->order();
    std::vector<semla::Vec> out;
    std::vector<std::size_t> digits(n, 0);
    do {
        semla::Vec v(s, n);
        for (std::size_t i = 0; i < n; ++i)
            v[i] = semla::Elem(digits[i]);
        out.push_back(std::move(v));
    } while (semla::next_assignment(digits, q));
    return out;
}

} // namespace testsup
