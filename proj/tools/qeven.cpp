// Command-line front end: parse expressions over either alphabet, run the
// normalizer, the reduction engine, the module builders, the classifier
// and the verification suites, with text or JSON output.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "qeven/json_io.hpp"

namespace {

using namespace qeven;

std::string read_expression(const std::string& arg) {
    if (!arg.empty() && arg != "-") return arg;
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
}

int run_normalize(const std::string& input, const std::string& format) {
    NCPoly p = parse_expr(read_expression(input), Alphabet::U);
    PBWForm nf = normalize(p);
    if (format == "json")
        std::cout << to_json(nf).dump(2) << "\n";
    else
        std::cout << nf.str() << "\n";
    return 0;
}

int run_reduce(const std::string& input, const std::string& format) {
    NCPoly p = parse_expr(read_expression(input), Alphabet::A);
    NormalForm nf = reduce(p);
    if (format == "json")
        std::cout << to_json(nf).dump(2) << "\n";
    else
        std::cout << nf.str() << "\n";
    return 0;
}

int run_rules(bool check, const std::string& format) {
    if (format == "json") {
        json out = json::array();
        for (const auto& r : reduction_rules()) {
            json entry{{"forbidden", r.lhs_word().str()},
                       {"rule", r.lhs_word().str() + " = " + r.rhs.str()},
                       {"distinguished", r.distinguished.str()},
                       {"transposed", r.distinguished_is_swap}};
            if (check)
                entry["sound"] = phi_image(NCPoly::from_word(r.lhs_word())) == phi_image(r.rhs);
            out.push_back(std::move(entry));
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    for (const auto& r : reduction_rules()) {
        std::cout << r.lhs_word().str() << " = " << r.rhs.str();
        if (check) {
            const bool ok = phi_image(NCPoly::from_word(r.lhs_word())) == phi_image(r.rhs);
            std::cout << "   [" << (ok ? "sound" : "UNSOUND") << "]";
        }
        std::cout << "\n";
    }
    return 0;
}

int run_enumerate(int max_len, const std::string& format) {
    auto words = enumerate_allowed(max_len);
    if (format == "json") {
        json out = json::array();
        for (const Word& w : words) out.push_back(w.str());
        std::cout << out.dump(2) << "\n";
    } else {
        for (const Word& w : words) std::cout << w.str() << "\n";
    }
    return 0;
}

int run_module(int d, std::optional<int> eps, const std::string& gen,
               const std::string& q_text, const std::string& format) {
    ModuleRep m = eps ? build_L_eps(d, *eps) : build_L(d);
    if (!q_text.empty()) m = eval_module(m, QValue(parse_rational(q_text)));
    if (!gen.empty()) {
        auto g = detail::gen_from_name(gen);
        if (!g) throw error("unknown generator '" + gen + "'");
        const json rows = to_json(m.action(*g));
        if (format == "text") {
            for (const auto& row : rows) {
                for (std::size_t j = 0; j < row.size(); ++j)
                    std::cout << (j ? "  " : "") << row[j].get<std::string>();
                std::cout << "\n";
            }
        } else {
            std::cout << rows.dump(2) << "\n";
        }
        return 0;
    }
    std::cout << to_json(m).dump(2) << "\n";
    return 0;
}

int run_classify(const std::string& path, const std::string& q_text, const std::string& format) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    json input_spec = json::parse(in);
    if (!q_text.empty()) input_spec["q"] = q_text;
    ModuleRep m = module_from_json(input_spec);
    HWData hw = extract_highest_weight(m);
    if (format == "json") {
        std::cout << to_json(hw).dump(2) << "\n";
    } else {
        std::cout << "d = " << hw.d << "\n";
        std::cout << "lambda = " << hw.lambda.str() << "\n";
        for (std::size_t i = 0; i < hw.alpha.size(); ++i)
            std::cout << "alpha_" << i << " = " << hw.alpha[i].str() << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, int max_len, int max_d, const std::string& q_text,
               const std::string& format) {
    SuiteBounds bounds;
    bounds.max_word_len = max_len;
    bounds.max_d = max_d;
    if (!q_text.empty()) bounds.q = QValue(parse_rational(q_text));
    SuiteReport report = run_suite(suite, bounds);
    if (format == "json") {
        std::cout << to_json(report).dump(2) << "\n";
    } else {
        for (const CheckResult& c : report.checks) {
            std::cout << (c.status == CheckStatus::pass     ? "PASS "
                          : c.status == CheckStatus::flagged ? "FLAG "
                                                             : "FAIL ")
                      << c.id << " - " << c.statement;
            if (!c.detail.empty() && c.status != CheckStatus::pass)
                std::cout << "\n     " << c.detail;
            std::cout << "\n";
        }
        std::cout << report.summary() << "\n";
    }
    return report.failed() == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in the equitable presentation and its positive even subalgebra"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::string expr;
    auto* cmd_normalize =
        app.add_subcommand("normalize", "rewrite a U-alphabet expression into the ordered basis");
    cmd_normalize->add_option("expr", expr, "expression over x, y, z ('-' reads stdin)");

    auto* cmd_reduce =
        app.add_subcommand("reduce", "rewrite an A-alphabet expression into allowed words");
    cmd_reduce->add_option("expr", expr, "expression over nx, ny, nz, x2, y2, z2 ('-' reads stdin)");

    bool rules_check = false;
    auto* cmd_rules = app.add_subcommand("rules", "print the 21 reduction rules");
    cmd_rules->add_flag("--check", rules_check, "verify each rule against the ordered-basis oracle");

    int max_len = 2;
    auto* cmd_enumerate = app.add_subcommand("enumerate", "list allowed words up to a length");
    cmd_enumerate->add_option("--max-len", max_len, "maximum word length")->default_val(2);

    int mod_d = 0;
    int eps_val = 0;
    std::string gen_name_opt, q_text;
    auto* cmd_module = app.add_subcommand("module", "emit module action matrices as JSON");
    cmd_module->add_option("--d", mod_d, "highest weight d (dimension d+1)")->required();
    cmd_module->add_option("--eps", eps_val, "type eps: +1 or -1 selects the U-alphabet module")
        ->check(CLI::IsMember({1, -1}));
    cmd_module->add_option("--gen", gen_name_opt, "emit a single generator action");
    cmd_module->add_option("--q", q_text, "evaluate entries at an exact rational q");

    std::string classify_input;
    auto* cmd_classify =
        app.add_subcommand("classify", "run highest-weight extraction on module matrices");
    cmd_classify->add_option("--input", classify_input, "module JSON file")->required();
    cmd_classify->add_option("--q", q_text, "evaluate entries at an exact rational q");

    std::string suite = "all";
    int verify_max_len = 5, verify_max_d = 8;
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("--suite", suite, "suite name")
        ->check(CLI::IsMember({"relations", "rules", "presentation", "modules", "classification",
                               "all"}));
    cmd_verify->add_option("--max-len", verify_max_len, "word length bound")->default_val(5);
    cmd_verify->add_option("--max-d", verify_max_d, "module dimension bound (d)")->default_val(8);
    cmd_verify->add_option("--q", q_text, "numeric checks use this exact rational q");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_normalize->parsed()) return run_normalize(expr, format);
        if (cmd_reduce->parsed()) return run_reduce(expr, format);
        if (cmd_rules->parsed()) return run_rules(rules_check, format);
        if (cmd_enumerate->parsed()) return run_enumerate(max_len, format);
        if (cmd_module->parsed())
            return run_module(mod_d, eps_val ? std::optional<int>(eps_val) : std::nullopt,
                              gen_name_opt, q_text, format);
        if (cmd_classify->parsed()) return run_classify(classify_input, q_text, format);
        if (cmd_verify->parsed()) return run_verify(suite, verify_max_len, verify_max_d, q_text, format);
    } catch (const qeven::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
