#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "semla/builders.hpp"
#include "semla/classify.hpp"
#include "semla/factorization.hpp"
#include "semla/matrix.hpp"
#include "semla/semiring.hpp"

namespace semla {

using nlohmann::json;

// --- semiring files -------------------------------------------------------
// {"order": q, "zero": i, "one": j, "names": [...], "add": [[...]], "mul": [[...]]}

inline json semiring_to_json(const Semiring& s) {
    if (!s.finite())
        throw NotEnumerableError("the naturals have no table serialization");
    const RawTables& t = s.tables();
    json j;
    j["order"] = t.order;
    j["zero"] = t.zero;
    j["one"] = t.one;
    j["names"] = t.names;
    j["add"] = t.add;
    j["mul"] = t.mul;
    return j;
}

inline SemiringPtr semiring_from_json(const json& j, const std::string& uri = "") {
    if (!j.is_object())
        throw ParseError("semiring file must be a JSON object");
    RawTables t;
    try {
        t.order = j.at("order").get<std::size_t>();
        t.zero = j.at("zero").get<std::size_t>();
        t.one = j.at("one").get<std::size_t>();
        if (j.contains("names"))
            t.names = j.at("names").get<std::vector<std::string>>();
        t.add = j.at("add").get<std::vector<std::vector<std::size_t>>>();
        t.mul = j.at("mul").get<std::vector<std::vector<std::size_t>>>();
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad semiring file: ") + e.what());
    }
    return Semiring::from_tables(std::move(t), uri);
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("bad JSON in " + path + ": " + e.what());
    }
    return j;
}

// Accepts a builder URI or a path to a semiring JSON file.
inline SemiringPtr resolve_semiring(const std::string& spec) {
    try {
        return semiring_from_uri(spec);
    } catch (const ParseError&) {
        if (!std::filesystem::exists(spec))
            throw ParseError("not a builder URI and not a file: " + spec);
        return semiring_from_json(load_json_file(spec), spec);
    }
}

// --- matrices and vectors --------------------------------------------------
// {"semiring": "<uri>", "rows": [["name-or-index", ...], ...]}

namespace detail {

inline Elem element_from_json(const Semiring& s, const json& cell) {
    if (cell.is_string()) {
        const auto e = s.parse_element(cell.get<std::string>());
        if (!e)
            throw ParseError("unknown element name: " + cell.get<std::string>());
        return *e;
    }
    if (cell.is_number_unsigned() || cell.is_number_integer()) {
        const auto v = cell.get<std::int64_t>();
        if (v < 0)
            throw ParseError("negative element index");
        Elem e(v);
        if (!s.contains(e))
            throw ParseError("element index out of range: " + std::to_string(v));
        return e;
    }
    throw ParseError("matrix entries must be names or nonnegative integers");
}

// The file may pin its semiring; when the caller supplies one as well the
// two must agree.
inline void check_declared_semiring(const json& j, const Semiring& s) {
    if (!j.contains("semiring") || !j.at("semiring").is_string())
        return;
    const std::string declared = j.at("semiring").get<std::string>();
    if (declared == s.uri())
        return;
    try {
        if (same_semiring(*semiring_from_uri(declared), s))
            return;
    } catch (const Error&) {
        // The declared string is a file path or unknown label; trust the caller.
        return;
    }
    throw SemiringMismatchError("matrix declares semiring '" + declared +
                                "' but '" + s.uri() + "' was supplied");
}

} // namespace detail

inline Matrix matrix_from_json(const json& j, const SemiringPtr& s) {
    if (!j.is_object() || !j.contains("rows"))
        throw ParseError("matrix file must be an object with a \"rows\" array");
    detail::check_declared_semiring(j, *s);
    const json& rows = j.at("rows");
    if (!rows.is_array() || rows.empty())
        throw ParseError("matrix needs at least one row");
    std::vector<std::vector<Elem>> data;
    for (const json& row : rows) {
        if (!row.is_array() || row.empty())
            throw ParseError("matrix rows must be nonempty arrays");
        std::vector<Elem> r;
        for (const json& cell : row)
            r.push_back(detail::element_from_json(*s, cell));
        data.push_back(std::move(r));
    }
    try {
        return Matrix::from_rows(s, data);
    } catch (const ShapeError& e) {
        throw ParseError(e.what());
    }
}

inline json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(m.semiring()->name(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"semiring", m.semiring()->uri()}, {"rows", std::move(rows)}};
}

// {"semiring": "<uri>", "entries": [...]} or a bare array of entries.
inline Vec vector_from_json(const json& j, const SemiringPtr& s) {
    const json* entries = &j;
    if (j.is_object()) {
        detail::check_declared_semiring(j, *s);
        if (!j.contains("entries"))
            throw ParseError("vector object needs an \"entries\" array");
        entries = &j.at("entries");
    }
    if (!entries->is_array() || entries->empty())
        throw ParseError("vector needs a nonempty entry array");
    std::vector<Elem> data;
    for (const json& cell : *entries)
        data.push_back(detail::element_from_json(*s, cell));
    return Vec(s, std::move(data));
}

inline json vector_to_json(const Vec& v) {
    json entries = json::array();
    for (std::size_t i = 0; i < v.size(); ++i)
        entries.push_back(v.semiring()->name(v[i]));
    return json{{"semiring", v.semiring()->uri()}, {"entries", std::move(entries)}};
}

// --- results ----------------------------------------------------------------

inline json cholesky_to_json(const CholeskyResult& r, const SemiringPtr& s) {
    json j;
    j["status"] = to_string(r.status);
    j["verified_hypotheses"] = to_string(r.verified);
    json pivots = json::array();
    for (const Elem& p : r.pivots)
        pivots.push_back(s->name(p));
    j["pivots"] = std::move(pivots);
    if (r.factor)
        j["L"] = matrix_to_json(*r.factor);
    switch (r.status) {
    case CholeskyStatus::NotStronglyInvertible:
        j["failing_k"] = r.failing_k;
        break;
    case CholeskyStatus::PivotNotSquare:
        j["step"] = r.step;
        j["pivot"] = s->name(*r.pivot);
        break;
    case CholeskyStatus::SubdiagonalNotNegatable:
        j["step"] = r.step;
        break;
    default:
        break;
    }
    return j;
}

inline json lu_to_json(const LuResult& r) {
    json j;
    j["status"] = to_string(r.status);
    if (r.ok()) {
        j["L"] = matrix_to_json(*r.lower);
        j["U"] = matrix_to_json(*r.upper);
    } else if (r.status == LuStatus::StronglyInvertibleRequired) {
        j["failing_k"] = r.failing_k;
    } else {
        j["step"] = r.step;
    }
    return j;
}

inline json gram_witness_to_json(const GramWitness& w) {
    json out = json::array();
    for (const auto& [v, count] : w.generators) {
        json g;
        g["vector"] = vector_to_json(v)["entries"];
        g["multiplicity"] = count;
        out.push_back(std::move(g));
    }
    return out;
}

inline json classification_to_json(const Matrix& m, const ClassificationReport& r) {
    const Semiring& s = *m.semiring();
    json j;
    j["symmetric"] = r.symmetric;
    j["invertible"] = r.invertible;
    j["strongly_invertible"] = r.strongly_invertible.value;
    if (!r.strongly_invertible.value)
        j["strongly_invertible_failing_k"] = r.strongly_invertible.failing_k;
    j["nnr"] = to_string(r.nnr.verdict);
    if (r.nnr.witness) {
        j["nnr_witness"] = vector_to_json(*r.nnr.witness)["entries"];
        j["nnr_witness_value"] = s.name(*r.nnr.value);
    }
    if (r.nnr.verdict == Verdict::Unknown)
        j["nnr_bound"] = r.nnr.bound;
    j["psd"] = to_string(r.psd.verdict);
    if (r.psd.witness)
        j["psd_witness"] = gram_witness_to_json(*r.psd.witness);
    j["q_closed_semiring"] = r.q_closed_semiring;
    return j;
}

} // namespace semla
