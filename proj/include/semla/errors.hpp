#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace semla {

// Base class for input and structural errors. Mathematical negatives
// (element not invertible, no factorization, ...) are never exceptions;
// they are reported through the per-operation result types.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Operation tables with wrong shapes, out-of-range indices or missing fields.
class MalformedTableError : public Error {
public:
    using Error::Error;
};

// Dimension mismatch between matrix/vector operands.
class ShapeError : public Error {
public:
    using Error::Error;
};

// Operands belong to different semirings.
class SemiringMismatchError : public Error {
public:
    using Error::Error;
};

// An exhaustive operation was requested on a non-enumerable carrier.
class NotEnumerableError : public Error {
public:
    using Error::Error;
};

// The (1,1) block entry is not a unit, so no Schur complement exists.
class PivotNotInvertibleError : public Error {
public:
    using Error::Error;
};

// A subdiagonal entry has no additive inverse.
class SubdiagonalNotNegatableError : public Error {
public:
    using Error::Error;
};

// A triangular factor violates the membership guarantees substitution relies
// on (unit diagonal, additively invertible off-diagonal).
class StructureViolationError : public Error {
public:
    using Error::Error;
};

// A decision procedure was invoked outside its hypothesis (e.g. the
// equivalence check on a semiring whose squares are not additively closed).
class HypothesisError : public Error {
public:
    using Error::Error;
};

// Bad input text: unresolvable element name, unknown builder URI, bad JSON.
class ParseError : public Error {
public:
    using Error::Error;
};

inline constexpr std::uint64_t kSearchGuard = 10'000'000;

// An exhaustive enumeration would exceed kSearchGuard candidates. The
// operation refuses loudly instead of sampling.
class SearchTooLargeError : public Error {
public:
    SearchTooLargeError(std::uint64_t candidates, std::uint64_t guard = kSearchGuard)
        : Error("search space of " + std::to_string(candidates) +
                " candidates exceeds the guard of " + std::to_string(guard)),
          candidates(candidates),
          guard(guard) {}

    std::uint64_t candidates;
    std::uint64_t guard;
};

} // namespace semla
