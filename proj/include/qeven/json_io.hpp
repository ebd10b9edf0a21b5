#pragma once

#include <json.hpp>

#include <string>

#include "qeven/modules.hpp"
#include "qeven/parse.hpp"
#include "qeven/presentation.hpp"
#include "qeven/verify.hpp"

namespace qeven {

using json = nlohmann::json;

// JSON shapes used by the CLI.  Laurent entries travel as their text form
// and re-parse to equal values.

inline json to_json(const PBWForm& p) {
    json out = json::array();
    for (const auto& t : p.monomials())
        out.push_back({{"r", t.r}, {"s", t.s}, {"t", t.t}, {"coeff", t.coeff.str()}});
    return out;
}

inline json to_json(const NormalForm& p) {
    json out = json::array();
    for (const auto& [w, c] : p.poly().terms())
        out.push_back({{"word", w.str()}, {"coeff", c.str()}});
    return out;
}

inline json to_json(const Matrix<Laurent>& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

inline json to_json(const ModuleRep& m) {
    json actions = json::object();
    for (const auto& [g, mat] : m.actions) actions[std::string(gen_name(g))] = to_json(mat);
    json out{{"dim", m.dim}, {"actions", std::move(actions)}};
    if (m.q) out["q"] = rational_str(m.q->value());
    return out;
}

inline json to_json(const HWData& hw) {
    json alpha = json::array();
    for (const Laurent& a : hw.alpha) alpha.push_back(a.str());
    return json{{"d", hw.d},
                {"lambda", hw.lambda.str()},
                {"alpha", std::move(alpha)},
                {"basis", to_json(hw.basis)}};
}

inline json to_json(const SuiteReport& r) {
    json checks = json::array();
    for (const CheckResult& c : r.checks) {
        json entry{{"id", c.id},
                   {"statement", c.statement},
                   {"status", std::string(status_name(c.status))}};
        if (!c.detail.empty()) entry["detail"] = c.detail;
        checks.push_back(std::move(entry));
    }
    return json{{"suite", r.suite},
                {"checks", std::move(checks)},
                {"summary",
                 {{"pass", r.passed()}, {"fail", r.failed()}, {"flagged", r.flagged()}}}};
}

inline Matrix<Laurent> matrix_from_json(const json& rows) {
    if (!rows.is_array() || rows.empty())
        throw error("matrix JSON must be a nonempty array of rows");
    const std::size_t n = rows.size();
    const std::size_t m = rows.front().size();
    Matrix<Laurent> out(n, m);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != m) throw error("matrix JSON rows have unequal lengths");
        for (std::size_t j = 0; j < m; ++j)
            out(i, j) = parse_laurent(rows[i][j].get<std::string>());
    }
    return out;
}

// Input schema: {dim, actions: {gen: [[entry]]}, q?: rational}.  The
// alphabet is inferred from the action names.
inline ModuleRep module_from_json(const json& input) {
    if (!input.contains("dim") || !input.contains("actions"))
        throw error("module JSON needs 'dim' and 'actions'");
    const std::size_t dim = input["dim"].get<std::size_t>();
    if (dim == 0) throw error("module dimension must be positive");
    ModuleRep out{Alphabet::A, dim, {}, std::nullopt};
    bool saw_u = false, saw_a = false;
    for (const auto& [name, rows] : input["actions"].items()) {
        auto g = detail::gen_from_name(name);
        if (!g) throw error("unknown generator name '" + name + "' in module JSON");
        (alphabet_of(*g) == Alphabet::U ? saw_u : saw_a) = true;
        Matrix<Laurent> m = matrix_from_json(rows);
        if (m.rows() != dim || m.cols() != dim)
            throw error("action '" + name + "' is not " + std::to_string(dim) + "x" +
                        std::to_string(dim));
        out.actions.emplace(*g, std::move(m));
    }
    if (saw_u && saw_a) throw error("module JSON mixes the U and A alphabets");
    out.alphabet = saw_u ? Alphabet::U : Alphabet::A;
    if (input.contains("q")) {
        const QValue q{parse_rational(input["q"].get<std::string>())};
        ModuleRep numeric = eval_module(out, q);
        return numeric;
    }
    return out;
}

} // namespace qeven
