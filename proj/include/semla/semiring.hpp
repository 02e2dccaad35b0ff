#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "semla/errors.hpp"

namespace semla {

// An element is the table index for finite semirings and the integer value
// itself for the naturals. Arbitrary precision keeps the naturals exact.
using Elem = boost::multiprecision::cpp_int;

enum class SemiringKind { FiniteTable, Naturals };

// The eight axiom families checked by validate_table. Closure is implied by
// table totality; right-handed variants follow from commutativity.
enum class Axiom {
    AddAssociative,
    MulAssociative,
    AddCommutative,
    MulCommutative,
    ZeroIdentity,
    OneIdentity,
    Distributive,
    ZeroAnnihilates,
};

inline const char* axiom_name(Axiom a) {
    switch (a) {
    case Axiom::AddAssociative: return "add-associative";
    case Axiom::MulAssociative: return "mul-associative";
    case Axiom::AddCommutative: return "add-commutative";
    case Axiom::MulCommutative: return "mul-commutative";
    case Axiom::ZeroIdentity: return "zero-identity";
    case Axiom::OneIdentity: return "one-identity";
    case Axiom::Distributive: return "distributive";
    case Axiom::ZeroAnnihilates: return "zero-annihilates";
    }
    return "?";
}

struct AxiomViolation {
    Axiom axiom;
    std::array<std::size_t, 3> witness{0, 0, 0};

    std::string message() const {
        return std::string(axiom_name(axiom)) + " fails at (" +
               std::to_string(witness[0]) + ", " + std::to_string(witness[1]) +
               ", " + std::to_string(witness[2]) + ")";
    }
};

// Unvalidated Cayley tables as loaded from a file or produced by a builder.
struct RawTables {
    std::size_t order = 0;
    std::size_t zero = 0;
    std::size_t one = 0;
    std::vector<std::string> names; // empty -> "0".."q-1"
    std::vector<std::vector<std::size_t>> add;
    std::vector<std::vector<std::size_t>> mul;
};

namespace detail {

inline void check_table_shape(const RawTables& t) {
    const std::size_t q = t.order;
    if (q == 0)
        throw MalformedTableError("semiring order must be positive");
    if (t.zero >= q || t.one >= q)
        throw MalformedTableError("zero/one index out of range");
    if (!t.names.empty() && t.names.size() != q)
        throw MalformedTableError("name table size does not match order");
    for (const auto* tab : {&t.add, &t.mul}) {
        if (tab->size() != q)
            throw MalformedTableError("operation table must have `order` rows");
        for (const auto& row : *tab) {
            if (row.size() != q)
                throw MalformedTableError("operation table row of wrong length");
            for (std::size_t v : row)
                if (v >= q)
                    throw MalformedTableError("table entry out of range");
        }
    }
}

} // namespace detail

// Checks the commutative-semiring axioms exhaustively and returns every
// violated instance. Shape problems throw MalformedTableError instead.
inline std::vector<AxiomViolation> validate_table(const RawTables& t) {
    detail::check_table_shape(t);
    const std::size_t q = t.order;
    const auto& add = t.add;
    const auto& mul = t.mul;
    std::vector<AxiomViolation> out;

    for (std::size_t a = 0; a < q; ++a) {
        if (add[a][t.zero] != a || add[t.zero][a] != a)
            out.push_back({Axiom::ZeroIdentity, {a, t.zero, 0}});
        if (mul[a][t.one] != a || mul[t.one][a] != a)
            out.push_back({Axiom::OneIdentity, {a, t.one, 0}});
        if (mul[a][t.zero] != t.zero || mul[t.zero][a] != t.zero)
            out.push_back({Axiom::ZeroAnnihilates, {a, t.zero, 0}});
    }
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = a + 1; b < q; ++b) {
            if (add[a][b] != add[b][a])
                out.push_back({Axiom::AddCommutative, {a, b, 0}});
            if (mul[a][b] != mul[b][a])
                out.push_back({Axiom::MulCommutative, {a, b, 0}});
        }
    for (std::size_t a = 0; a < q; ++a)
        for (std::size_t b = 0; b < q; ++b)
            for (std::size_t c = 0; c < q; ++c) {
                if (add[add[a][b]][c] != add[a][add[b][c]])
                    out.push_back({Axiom::AddAssociative, {a, b, c}});
                if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
                    out.push_back({Axiom::MulAssociative, {a, b, c}});
                if (mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]])
                    out.push_back({Axiom::Distributive, {a, b, c}});
            }
    return out;
}

class AxiomError : public Error {
public:
    explicit AxiomError(std::vector<AxiomViolation> v)
        : Error("semiring axioms violated (" + std::to_string(v.size()) +
                " instances, first: " + (v.empty() ? "?" : v.front().message()) + ")"),
          violations(std::move(v)) {}

    std::vector<AxiomViolation> violations;
};

// U(S), V(S) and Q(S) with the witness maps, computed once by exhaustion.
struct DerivedSets {
    std::vector<std::size_t> units;          // U(S), ascending indices
    std::vector<std::size_t> add_invertible; // V(S)
    std::vector<std::size_t> squares;        // Q(S)
    std::vector<std::optional<std::size_t>> inverse;  // a -> a^-1
    std::vector<std::optional<std::size_t>> negation; // a -> -a
    std::vector<std::vector<std::size_t>> roots;      // a -> all b with b^2 = a
};

class Semiring;
using SemiringPtr = std::shared_ptr<const Semiring>;

// A commutative semiring, either as validated Cayley tables or as the
// naturals with oracle operations. Immutable after construction and safe to
// share across threads.
class Semiring : public std::enable_shared_from_this<Semiring> {
public:
    enum class Validate { Yes, No };

    static SemiringPtr from_tables(RawTables t, std::string uri = "",
                                   Validate validate = Validate::Yes) {
        detail::check_table_shape(t);
        if (validate == Validate::Yes) {
            auto violations = validate_table(t);
            if (!violations.empty())
                throw AxiomError(std::move(violations));
        }
        return SemiringPtr(new Semiring(std::move(t), std::move(uri)));
    }

    static SemiringPtr naturals() { return SemiringPtr(new Semiring()); }

    SemiringKind kind() const { return kind_; }
    bool finite() const { return kind_ == SemiringKind::FiniteTable; }

    std::size_t order() const {
        require_finite("order");
        return tables_.order;
    }

    const std::string& uri() const { return uri_; }
    const RawTables& tables() const {
        require_finite("tables");
        return tables_;
    }

    Elem zero() const { return finite() ? Elem(tables_.zero) : Elem(0); }
    Elem one() const { return finite() ? Elem(tables_.one) : Elem(1); }

    bool contains(const Elem& a) const {
        if (finite())
            return a >= 0 && a < tables_.order;
        return a >= 0;
    }

    // Checked narrowing of an element to its table index.
    std::size_t index(const Elem& a) const {
        require_finite("index");
        if (!contains(a))
            throw MalformedTableError("element index out of range for semiring " + uri_);
        return static_cast<std::size_t>(a);
    }

    Elem element(std::size_t i) const {
        require_finite("element");
        if (i >= tables_.order)
            throw MalformedTableError("element index out of range");
        return Elem(i);
    }

    Elem add(const Elem& a, const Elem& b) const {
        if (finite())
            return Elem(tables_.add[index(a)][index(b)]);
        return a + b;
    }

    Elem mul(const Elem& a, const Elem& b) const {
        if (finite())
            return Elem(tables_.mul[index(a)][index(b)]);
        return a * b;
    }

    bool is_unit(const Elem& a) const {
        if (finite())
            return derived_.inverse[index(a)].has_value();
        return a == 1;
    }

    std::optional<Elem> inverse(const Elem& a) const {
        if (finite()) {
            const auto& inv = derived_.inverse[index(a)];
            if (!inv)
                return std::nullopt;
            return Elem(*inv);
        }
        if (a == 1)
            return Elem(1);
        return std::nullopt;
    }

    bool is_add_invertible(const Elem& a) const {
        if (finite())
            return derived_.negation[index(a)].has_value();
        return a == 0;
    }

    std::optional<Elem> negation(const Elem& a) const {
        if (finite()) {
            const auto& n = derived_.negation[index(a)];
            if (!n)
                return std::nullopt;
            return Elem(*n);
        }
        if (a == 0)
            return Elem(0);
        return std::nullopt;
    }

    bool is_square(const Elem& a) const {
        if (finite())
            return !derived_.roots[index(a)].empty();
        Elem r = boost::multiprecision::sqrt(a);
        return r * r == a;
    }

    // All b with b^2 = a, ascending. Empty exactly when a is not a square.
    std::vector<Elem> square_roots(const Elem& a) const {
        std::vector<Elem> out;
        if (finite()) {
            for (std::size_t r : derived_.roots[index(a)])
                out.emplace_back(r);
        } else {
            Elem r = boost::multiprecision::sqrt(a);
            if (r * r == a)
                out.push_back(r);
        }
        return out;
    }

    const DerivedSets& derived() const {
        require_finite("derived sets");
        return derived_;
    }

    std::string name(const Elem& a) const {
        if (finite())
            return tables_.names[index(a)];
        return a.str();
    }

    // Resolves an element by display name, falling back to a decimal index
    // (finite) or value (naturals).
    std::optional<Elem> parse_element(const std::string& text) const {
        if (finite()) {
            for (std::size_t i = 0; i < tables_.order; ++i)
                if (tables_.names[i] == text)
                    return Elem(i);
        }
        if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
            return std::nullopt;
        Elem v(text);
        if (!contains(v))
            return std::nullopt;
        return v;
    }

private:
    Semiring() : kind_(SemiringKind::Naturals), uri_("nat") {}

    Semiring(RawTables t, std::string uri)
        : kind_(SemiringKind::FiniteTable), tables_(std::move(t)), uri_(std::move(uri)) {
        if (tables_.names.empty()) {
            tables_.names.reserve(tables_.order);
            for (std::size_t i = 0; i < tables_.order; ++i)
                tables_.names.push_back(std::to_string(i));
        }
        compute_derived();
    }

    void compute_derived() {
        const std::size_t q = tables_.order;
        derived_.inverse.assign(q, std::nullopt);
        derived_.negation.assign(q, std::nullopt);
        derived_.roots.assign(q, {});
        for (std::size_t a = 0; a < q; ++a)
            for (std::size_t b = 0; b < q; ++b) {
                if (tables_.mul[a][b] == tables_.one && !derived_.inverse[a])
                    derived_.inverse[a] = b;
                if (tables_.add[a][b] == tables_.zero && !derived_.negation[a])
                    derived_.negation[a] = b;
            }
        for (std::size_t b = 0; b < q; ++b)
            derived_.roots[tables_.mul[b][b]].push_back(b);
        for (std::size_t a = 0; a < q; ++a) {
            if (derived_.inverse[a])
                derived_.units.push_back(a);
            if (derived_.negation[a])
                derived_.add_invertible.push_back(a);
            if (!derived_.roots[a].empty())
                derived_.squares.push_back(a);
        }
    }

    void require_finite(const char* what) const {
        if (!finite())
            throw NotEnumerableError(std::string(what) +
                                     " is not available for the naturals; use the element oracles");
    }

    SemiringKind kind_;
    RawTables tables_;
    std::string uri_;
    DerivedSets derived_;
};

// Structural identity; pointer equality is the fast path.
inline bool same_semiring(const Semiring& a, const Semiring& b) {
    if (&a == &b)
        return true;
    if (a.kind() != b.kind())
        return false;
    if (a.kind() == SemiringKind::Naturals)
        return true;
    const RawTables& ta = a.tables();
    const RawTables& tb = b.tables();
    return ta.order == tb.order && ta.zero == tb.zero && ta.one == tb.one &&
           ta.add == tb.add && ta.mul == tb.mul;
}

inline bool same_semiring(const SemiringPtr& a, const SemiringPtr& b) {
    return a && b && same_semiring(*a, *b);
}

} // namespace semla
