// semla — exact linear algebra over finite commutative semirings.
//
// Exit codes: 0 = success / verdict computed, 1 = mathematical negative
// (no factorization, fixture failure, empty search), 2 = input error,
// 3 = search guard exceeded.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "semla/builders.hpp"
#include "semla/classify.hpp"
#include "semla/factorization.hpp"
#include "semla/fixtures.hpp"
#include "semla/json_io.hpp"
#include "semla/matrix.hpp"
#include "semla/search.hpp"
#include "semla/solve.hpp"

namespace {

using namespace semla;

std::string format_matrix(const Matrix& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out += m.semiring()->name(m.at(i, j));
            if (j + 1 < m.cols())
                out += ", ";
        }
        out += "]";
        if (i + 1 < m.rows())
            out += ",\n ";
    }
    return out + "]";
}

std::string format_vec(const Vec& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        out += v.semiring()->name(v[i]);
        if (i + 1 < v.size())
            out += ", ";
    }
    return out + "]";
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_semiring_check(const std::string& spec) {
    SemiringPtr s;
    try {
        s = resolve_semiring(spec);
    } catch (const AxiomError& e) {
        for (const auto& v : e.violations)
            std::cout << v.message() << "\n";
        std::cout << "invalid: " << e.violations.size() << " axiom violations\n";
        return 1;
    }
    if (s->finite()) {
        const auto violations = validate_table(s->tables());
        for (const auto& v : violations)
            std::cout << v.message() << "\n";
        if (!violations.empty()) {
            std::cout << "invalid: " << violations.size() << " axiom violations\n";
            return 1;
        }
        std::cout << "valid commutative semiring of order " << s->order() << "\n";
    } else {
        std::cout << "valid commutative semiring (naturals, oracle-backed)\n";
    }
    return 0;
}

int cmd_semiring_info(const std::string& spec, bool as_json) {
    const SemiringPtr s = resolve_semiring(spec);
    if (!s->finite()) {
        if (as_json) {
            print_json(json{{"uri", s->uri()},
                            {"kind", "naturals"},
                            {"units", {"1"}},
                            {"add_invertible", {"0"}},
                            {"squares", "perfect squares"},
                            {"q_closed", false}});
        } else {
            std::cout << "semiring: " << s->uri() << " (infinite, oracle-backed)\n"
                      << "U(S) = {1}, V(S) = {0}, Q(S) = perfect squares\n"
                      << "q-closed: no\n";
        }
        return 0;
    }
    const auto& d = s->derived();
    auto names_of = [&](const std::vector<std::size_t>& idx) {
        std::vector<std::string> out;
        for (std::size_t i : idx)
            out.push_back(s->name(Elem(i)));
        return out;
    };
    if (as_json) {
        json j = semiring_to_json(*s);
        j["uri"] = s->uri();
        j["units"] = names_of(d.units);
        j["add_invertible"] = names_of(d.add_invertible);
        j["squares"] = names_of(d.squares);
        j["q_closed"] = q_closed(*s);
        print_json(j);
        return 0;
    }
    std::cout << "semiring: " << s->uri() << ", order " << s->order() << "\n";
    std::cout << "zero = " << s->name(s->zero()) << ", one = " << s->name(s->one()) << "\n";
    auto print_set = [&](const char* label, const std::vector<std::size_t>& idx) {
        std::cout << label << " = {";
        for (std::size_t i = 0; i < idx.size(); ++i)
            std::cout << (i ? ", " : "") << s->name(Elem(idx[i]));
        std::cout << "}\n";
    };
    print_set("U(S)", d.units);
    print_set("V(S)", d.add_invertible);
    print_set("Q(S)", d.squares);
    std::cout << "q-closed: " << (q_closed(*s) ? "yes" : "no") << "\n";
    return 0;
}

int cmd_classify(const std::string& sspec, const std::string& mpath, std::uint64_t nnr_bound,
                 bool as_json) {
    const SemiringPtr s = resolve_semiring(sspec);
    const Matrix m = matrix_from_json(load_json_file(mpath), s);
    const ClassificationReport r = classify(m, nnr_bound);
    if (as_json) {
        print_json(classification_to_json(m, r));
        return 0;
    }
    auto yesno = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "symmetric:           " << yesno(r.symmetric) << "\n";
    std::cout << "invertible:          " << yesno(r.invertible) << "\n";
    std::cout << "strongly invertible: " << yesno(r.strongly_invertible.value);
    if (!r.strongly_invertible.value)
        std::cout << "  (first failing k = " << r.strongly_invertible.failing_k << ")";
    std::cout << "\n";
    std::cout << "numerical range:     " << to_string(r.nnr.verdict);
    if (r.nnr.witness)
        std::cout << "  (witness x = " << format_vec(*r.nnr.witness)
                  << ", value " << s->name(*r.nnr.value) << ")";
    if (r.nnr.verdict == Verdict::Unknown)
        std::cout << "  (searched up to bound " << r.nnr.bound << ")";
    std::cout << "\n";
    std::cout << "psd:                 " << to_string(r.psd.verdict) << "\n";
    std::cout << "q-closed semiring:   " << yesno(r.q_closed_semiring) << "\n";
    return 0;
}

int cmd_cholesky(const std::string& sspec, const std::string& mpath, const std::string& level,
                 bool as_json) {
    const SemiringPtr s = resolve_semiring(sspec);
    const Matrix m = matrix_from_json(load_json_file(mpath), s);
    const auto request = level == "theorem" ? HypothesisLevel::Theorem : HypothesisLevel::Local;
    const CholeskyResult r = cholesky(m, request);
    if (as_json) {
        print_json(cholesky_to_json(r, s));
    } else {
        std::cout << "status: " << to_string(r.status) << "\n";
        if (r.ok()) {
            std::cout << "L =\n" << format_matrix(*r.factor) << "\n";
            std::cout << "pivots: ";
            for (std::size_t i = 0; i < r.pivots.size(); ++i)
                std::cout << (i ? ", " : "") << s->name(r.pivots[i]);
            std::cout << "\nverified hypotheses: " << to_string(r.verified) << "\n";
        } else if (r.status == CholeskyStatus::NotStronglyInvertible) {
            std::cout << "first non-invertible leading block: k = " << r.failing_k << "\n";
        } else if (r.status == CholeskyStatus::PivotNotSquare) {
            std::cout << "step " << r.step << ": pivot " << s->name(*r.pivot)
                      << " is not a square\n";
        } else if (r.status == CholeskyStatus::SubdiagonalNotNegatable) {
            std::cout << "step " << r.step << ": subdiagonal entry not additively invertible\n";
        }
    }
    return r.ok() ? 0 : 1;
}

int cmd_lu(const std::string& sspec, const std::string& mpath, bool as_json) {
    const SemiringPtr s = resolve_semiring(sspec);
    const Matrix m = matrix_from_json(load_json_file(mpath), s);
    const LuResult r = lu(m);
    if (as_json) {
        print_json(lu_to_json(r));
    } else {
        std::cout << "status: " << to_string(r.status) << "\n";
        if (r.ok()) {
            std::cout << "L =\n" << format_matrix(*r.lower) << "\n";
            std::cout << "U =\n" << format_matrix(*r.upper) << "\n";
        } else if (r.status == LuStatus::StronglyInvertibleRequired) {
            std::cout << "first non-invertible leading block: k = " << r.failing_k << "\n";
        }
    }
    return r.ok() ? 0 : 1;
}

int cmd_solve(const std::string& sspec, const std::string& mpath, const std::string& vpath,
              bool as_json) {
    const SemiringPtr s = resolve_semiring(sspec);
    const Matrix m = matrix_from_json(load_json_file(mpath), s);
    const Vec c = vector_from_json(load_json_file(vpath), s);
    const SolveResult r = solve_spd(m, c);
    if (!r.ok()) {
        if (as_json) {
            print_json(json{{"status", to_string(r.factorization.status)},
                            {"residual_verified", false}});
        } else {
            std::cout << "no solution: factorization failed with "
                      << to_string(r.factorization.status) << "\n";
        }
        return 1;
    }
    if (as_json) {
        json j = vector_to_json(*r.solution);
        j["residual_verified"] = r.residual_verified;
        print_json(j);
    } else {
        std::cout << "y = " << format_vec(*r.solution) << "\n";
        std::cout << "residual verified: " << (r.residual_verified ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_verify_paper(bool as_json, bool inject_fault) {
    SemiringPtr z6_override;
    if (inject_fault) {
        RawTables t = make_zn(6)->tables();
        t.mul[2][3] = 1;
        t.mul[3][2] = 1;
        z6_override = Semiring::from_tables(std::move(t), "zn:6-corrupt", Semiring::Validate::No);
    }
    const auto results = run_reference_fixtures(z6_override);
    bool all = true;
    if (as_json) {
        json j = json::array();
        for (const auto& r : results) {
            all = all && r.passed;
            j.push_back(json{{"id", r.id},
                             {"title", r.title},
                             {"passed", r.passed},
                             {"notes", r.notes}});
        }
        print_json(json{{"fixtures", std::move(j)}, {"all_passed", all}});
    } else {
        std::size_t passed = 0;
        for (const auto& r : results) {
            std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.id << ": " << r.title << "\n";
            for (const auto& note : r.notes)
                std::cout << "      - " << note << "\n";
            all = all && r.passed;
            passed += r.passed ? 1 : 0;
        }
        std::cout << passed << "/" << results.size() << " fixtures passed\n";
    }
    return all ? 0 : 1;
}

int cmd_search(const std::string& sspec, std::size_t n, const std::string& predicates,
               std::uint64_t limit, bool as_json) {
    const SemiringPtr s = resolve_semiring(sspec);
    const auto literals = parse_predicates(predicates);
    std::uint64_t shown = 0;
    const std::uint64_t matches =
        search_symmetric(s, n, literals, [&](const Matrix& m) {
            ++shown;
            if (as_json)
                std::cout << matrix_to_json(m).dump() << "\n";
            else
                std::cout << "match " << shown << ": " << format_matrix(m) << "\n";
            return limit == 0 || shown < limit;
        });
    if (!as_json)
        std::cout << "matches: " << matches << "\n";
    return matches > 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact linear algebra over commutative semirings"};
    app.require_subcommand(1);

    std::string sspec, mpath, vpath, level = "local", predicates;
    std::uint64_t nnr_bound = 3, limit = 0;
    std::size_t size_n = 2;
    bool as_json = false, inject_fault = false;

    auto* sr = app.add_subcommand("semiring", "validate or describe a semiring");
    sr->require_subcommand(1);
    auto* sr_check = sr->add_subcommand("check", "validate the axioms of a semiring");
    sr_check->add_option("semiring", sspec, "builder URI or JSON file")->required();
    auto* sr_info = sr->add_subcommand("info", "print order, units, negatables and squares");
    sr_info->add_option("semiring", sspec, "builder URI or JSON file")->required();
    sr_info->add_flag("--json", as_json, "machine-readable output");

    auto* cls = app.add_subcommand("classify", "classify a matrix");
    cls->add_option("semiring", sspec)->required();
    cls->add_option("matrix", mpath, "matrix JSON file")->required();
    cls->add_option("--nnr-bound", nnr_bound, "entry bound for the naturals search");
    cls->add_flag("--json", as_json);

    auto* cho = app.add_subcommand("cholesky", "factor a symmetric matrix as L L^T");
    cho->add_option("semiring", sspec)->required();
    cho->add_option("matrix", mpath)->required();
    cho->add_option("--verify", level, "hypothesis level to verify: local | theorem")
        ->check(CLI::IsMember({"local", "theorem"}));
    cho->add_flag("--json", as_json);

    auto* lu_cmd = app.add_subcommand("lu", "factor a strongly invertible matrix as L U");
    lu_cmd->add_option("semiring", sspec)->required();
    lu_cmd->add_option("matrix", mpath)->required();
    lu_cmd->add_flag("--json", as_json);

    auto* sol = app.add_subcommand("solve", "solve M y = c through the Cholesky factor");
    sol->add_option("semiring", sspec)->required();
    sol->add_option("matrix", mpath)->required();
    sol->add_option("vector", vpath, "right-hand side JSON file")->required();
    sol->add_flag("--json", as_json);

    auto* ver = app.add_subcommand("verify-paper", "run the built-in reference fixtures");
    ver->add_flag("--json", as_json);
    ver->add_flag("--inject-fixture-fault", inject_fault)->group("");

    auto* sea = app.add_subcommand("search", "stream symmetric matrices matching predicates");
    sea->add_option("semiring", sspec)->required();
    sea->add_option("n", size_n, "matrix size")->required();
    sea->add_option("predicates", predicates,
                    "conjunction, e.g. strongly-invertible,nnr,!cholesky")
        ->required();
    sea->add_option("--limit", limit, "stop after this many matches (0 = all)");
    sea->add_flag("--json", as_json);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (sr_check->parsed())
            return cmd_semiring_check(sspec);
        if (sr_info->parsed())
            return cmd_semiring_info(sspec, as_json);
        if (cls->parsed())
            return cmd_classify(sspec, mpath, nnr_bound, as_json);
        if (cho->parsed())
            return cmd_cholesky(sspec, mpath, level, as_json);
        if (lu_cmd->parsed())
            return cmd_lu(sspec, mpath, as_json);
        if (sol->parsed())
            return cmd_solve(sspec, mpath, vpath, as_json);
        if (ver->parsed())
            return cmd_verify_paper(as_json, inject_fault);
        if (sea->parsed())
            return cmd_search(sspec, size_n, predicates, limit, as_json);
    } catch (const SearchTooLargeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
