// Acceptance suite: one line per criterion, exact tolerances, wall-clock
// budgets.  Exit code 0 only if every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "qeven/verify.hpp"

using namespace qeven;

namespace {

struct Outcome {
    bool pass;
    std::string note;
};

int failures = 0;

void run_criterion(int number, const std::string& title, double budget_seconds,
                   const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = budget_seconds <= 0.0 || secs < budget_seconds;
    const bool pass = out.pass && in_budget;
    if (!pass) ++failures;
    std::printf("criterion %d: %s ... %s (%.2fs%s)%s%s\n", number, title.c_str(),
                pass ? "PASS" : "FAIL", secs,
                budget_seconds > 0.0 ? (" < " + std::to_string((int)budget_seconds) + "s").c_str()
                                     : "",
                out.note.empty() ? "" : " - ", out.note.c_str());
    std::fflush(stdout);
}

std::size_t count_prefix(const SuiteReport& r, const std::string& prefix) {
    std::size_t n = 0;
    for (const auto& c : r.checks)
        if (c.id.rfind(prefix, 0) == 0) ++n;
    return n;
}

} // namespace

int main() {
    SuiteReport relations, rules, presentation, modules, classification;

    run_criterion(1, "every catalogued identity verifies to exact zero in the oracle", 5.0, [&] {
        relations = run_relations_suite();
        const bool families =
            count_prefix(relations, "flip.") == 6 && count_prefix(relations, "pairs.") == 6 &&
            count_prefix(relations, "nu-comm.x") >= 2 && count_prefix(relations, "sq-comm.") == 6 &&
            count_prefix(relations, "sq-pair.") == 6 && count_prefix(relations, "sq-nu.") == 6 &&
            count_prefix(relations, "sq-from-nu.") == 3 &&
            count_prefix(relations, "nu-from-sq.") == 3 && count_prefix(relations, "cubic.") == 6 &&
            count_prefix(relations, "mixed-cubic.") == 6;
        return Outcome{relations.failed() == 0 && families,
                       std::to_string(relations.passed()) + " identities exact"};
    });

    run_criterion(2, "all 21 reduction rules are sound against the oracle", 5.0, [&] {
        rules = run_rules_suite();
        return Outcome{rules.failed() == 0 && count_prefix(rules, "rule.") == 21,
                       "21 rules verified"};
    });

    run_criterion(
        3,
        "phi(w) = phi(reduce(w)) for all 9331 words of length <= 5; "
        "95 allowed-word images independent; 2000-word confluence sample",
        300.0, [&] {
            presentation = run_presentation_suite();
            std::size_t exhaustive = 0;
            for (int len = 0; len <= 5; ++len)
                if ([&] {
                        for (const auto& c : presentation.checks)
                            if (c.id == "phi-consistency.len-" + std::to_string(len) &&
                                c.status == CheckStatus::pass)
                                return true;
                        return false;
                    }())
                    ++exhaustive;
            bool independence = false, confluence = false, rank_ok = false;
            for (const auto& c : presentation.checks) {
                if (c.id == "independence.leading-monomials")
                    independence = c.status == CheckStatus::pass &&
                                   c.statement.find("95 allowed words") != std::string::npos;
                if (c.id == "independence.rank") rank_ok = c.status == CheckStatus::pass;
                if (c.id == "confluence.random") confluence = c.status == CheckStatus::pass;
            }
            return Outcome{presentation.failed() == 0 && exhaustive == 6 && independence &&
                               rank_ok && confluence,
                           "9331 words exact"};
        });

    run_criterion(4,
                  "for d = 0..8 the module satisfies all defining relations, is irreducible, "
                  "and nu_x, nu_y have nilpotency index exactly d+1",
                  120.0, [&] {
                      modules = run_modules_suite();
                      const bool counts = count_prefix(modules, "module-relations.L") == 9 &&
                                          count_prefix(modules, "irreducible.") == 9 &&
                                          count_prefix(modules, "nilpotency.") == 9;
                      return Outcome{modules.failed() == 0 && counts, "d = 0..8 exact"};
                  });

    run_criterion(
        5,
        "for d = 0..8 extraction returns lambda = q^{-2d} and the closed alpha; the gamma "
        "intertwiner verifies; Hom dimensions are 1 (A) and 0 (U) for d = 0..5 at q = 2; a "
        "conjugated module at q = 3/2 classifies correctly",
        120.0, [&] {
            classification = run_classification_suite();
            const bool counts = count_prefix(classification, "extraction.") == 10 &&
                                count_prefix(classification, "gamma.") == 9 &&
                                count_prefix(classification, "hom.a-alphabet.") == 6 &&
                                count_prefix(classification, "hom.u-alphabet.") == 6;
            bool conjugated_ok = false;
            for (const auto& c : classification.checks)
                if (c.id == "extraction.conjugated") conjugated_ok = c.status == CheckStatus::pass;
            return Outcome{classification.failed() == 0 && counts && conjugated_ok,
                           "classification exact"};
        });

    run_criterion(6, "the full report contains exactly two flagged items and zero failures", 0.0,
                  [&] {
                      SuiteReport all{"all", {}};
                      for (const SuiteReport* r :
                           {&relations, &rules, &presentation, &modules, &classification})
                          all.checks.insert(all.checks.end(), r->checks.begin(), r->checks.end());
                      bool lit_rel = false, lit_mod = false;
                      for (const auto& c : all.checks) {
                          if (c.status != CheckStatus::flagged) continue;
                          if (c.id == "nu-comm.literal-x2-nuz") lit_rel = true;
                          if (c.id == "module-table.literal-x2-subdiagonal") lit_mod = true;
                      }
                      return Outcome{all.flagged() == 2 && all.failed() == 0 && lit_rel && lit_mod,
                                     all.summary()};
                  });

    if (failures == 0)
        std::printf("acceptance: all 6 criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", failures);
    return failures == 0 ? 0 : 1;
}
