#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semla/classify.hpp"
#include "semla/enumerate.hpp"
#include "semla/factorization.hpp"
#include "semla/matrix.hpp"
#include "semla/numerical_range.hpp"

namespace semla {

enum class Predicate { Invertible, StronglyInvertible, Nnr, Psd, Cholesky };

struct PredicateLiteral {
    Predicate predicate;
    bool negated = false;
};

// Parses a conjunction like "strongly-invertible,nnr,!cholesky". Accepted
// separators: comma, whitespace, '&'. A literal may be negated with a
// leading '!' or "not-".
inline std::vector<PredicateLiteral> parse_predicates(const std::string& text) {
    std::vector<PredicateLiteral> out;
    std::string token;
    auto flush = [&] {
        if (token.empty())
            return;
        PredicateLiteral lit;
        std::string name = token;
        token.clear();
        if (name.rfind("!", 0) == 0) {
            lit.negated = true;
            name = name.substr(1);
        } else if (name.rfind("not-", 0) == 0) {
            lit.negated = true;
            name = name.substr(4);
        }
        if (name == "invertible")
            lit.predicate = Predicate::Invertible;
        else if (name == "strongly-invertible")
            lit.predicate = Predicate::StronglyInvertible;
        else if (name == "nnr")
            lit.predicate = Predicate::Nnr;
        else if (name == "psd")
            lit.predicate = Predicate::Psd;
        else if (name == "cholesky")
            lit.predicate = Predicate::Cholesky;
        else
            throw ParseError("unknown predicate: " + name);
        out.push_back(lit);
    };
    for (char c : text) {
        if (c == ',' || c == '&' || c == ' ' || c == '\t')
            flush();
        else
            token.push_back(c);
    }
    flush();
    if (out.empty())
        throw ParseError("empty predicate conjunction");
    return out;
}

// Streams every symmetric n x n matrix satisfying the conjunction, in
// canonical upper-triangle order. The sink returns false to stop early.
// Returns the number of matches yielded.
inline std::uint64_t search_symmetric(const SemiringPtr& s, std::size_t n,
                                      const std::vector<PredicateLiteral>& literals,
                                      const std::function<bool(const Matrix&)>& sink) {
    if (!s->finite())
        throw NotEnumerableError("predicate search needs a finite semiring");
    const std::size_t q = s->order();
    const auto positions = upper_triangle_positions(n);
    require_within_guard(pow_saturating(q, positions.size()));

    std::optional<PsdClosure> closure;
    for (const auto& lit : literals)
        if (lit.predicate == Predicate::Psd && !closure)
            closure.emplace(s, n);

    std::uint64_t matches = 0;
    std::vector<std::size_t> digits(positions.size(), 0);
    do {
        Matrix m(s, n, n);
        for (std::size_t p = 0; p < positions.size(); ++p) {
            const auto [i, j] = positions[p];
            m.set(i, j, Elem(digits[p]));
            m.set(j, i, Elem(digits[p]));
        }
        bool keep = true;
        for (const auto& lit : literals) {
            bool value = false;
            switch (lit.predicate) {
            case Predicate::Invertible:
                value = invert(m).ok();
                break;
            case Predicate::StronglyInvertible:
                value = is_strongly_invertible(m).ok;
                break;
            case Predicate::Nnr:
                value = has_nonneg_numerical_range(m).yes();
                break;
            case Predicate::Psd:
                value = closure->contains(m);
                break;
            case Predicate::Cholesky:
                value = cholesky(m).ok();
                break;
            }
            if (value == lit.negated) {
                keep = false;
                break;
            }
        }
        if (keep) {
            ++matches;
            if (!sink(m))
                break;
        }
    } while (next_assignment(digits, q));
    return matches;
}

} // namespace semla
