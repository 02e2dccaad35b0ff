#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "semla/enumerate.hpp"
#include "semla/matrix.hpp"

namespace semla {

enum class Verdict { Yes, No, Unknown };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
    }
    return "?";
}

inline Elem quadratic_form(const Matrix& m, const Vec& x) {
    const Semiring& s = *m.semiring();
    const Vec mx = m * x;
    Elem acc = s.zero();
    for (std::size_t i = 0; i < x.size(); ++i)
        acc = s.add(acc, s.mul(x[i], mx[i]));
    return acc;
}

struct NnrReport {
    Verdict verdict = Verdict::Unknown;
    std::optional<Vec> witness; // first x in canonical order with x^T M x not a square
    std::optional<Elem> value;  // the non-square value x^T M x
    std::uint64_t bound = 0;    // entry bound of the search when not exhaustive

    bool yes() const { return verdict == Verdict::Yes; }
};

// Decides whether x^T M x is a square for every x. Finite semirings are
// enumerated exhaustively (Unknown only if S^n exceeds the search guard);
// over the naturals entries range over [0, nat_bound] and a clean pass is
// reported as Unknown, never Yes.
inline NnrReport has_nonneg_numerical_range(const Matrix& m, std::uint64_t nat_bound = 3) {
    if (!m.square())
        throw ShapeError("numerical range needs a square matrix");
    const Semiring& s = *m.semiring();
    const std::size_t n = m.rows();
    NnrReport report;

    const bool finite = s.finite();
    const std::uint64_t base = finite ? s.order() : nat_bound + 1;
    if (finite && pow_saturating(base, n) > kSearchGuard) {
        report.verdict = Verdict::Unknown;
        report.bound = kSearchGuard;
        return report;
    }

    std::vector<std::size_t> digits(n, 0);
    do {
        Vec x(m.semiring(), n);
        for (std::size_t i = 0; i < n; ++i)
            x[i] = Elem(digits[i]);
        Elem value = quadratic_form(m, x);
        if (!s.is_square(value)) {
            report.verdict = Verdict::No;
            report.witness = std::move(x);
            report.value = std::move(value);
            return report;
        }
    } while (next_assignment(digits, static_cast<std::size_t>(base)));

    report.verdict = finite ? Verdict::Yes : Verdict::Unknown;
    report.bound = finite ? 0 : nat_bound;
    return report;
}

} // namespace semla
