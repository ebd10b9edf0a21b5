#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "qeven/json_io.hpp"
#include "qeven/verify.hpp"

using namespace qeven;

namespace {
SuiteBounds small_bounds() {
    SuiteBounds b;
    b.max_word_len = 3;
    b.max_d = 3;
    return b;
}
} // namespace

TEST_CASE("relations suite passes with one flagged item") {
    SuiteReport r = run_relations_suite();
    CHECK(r.failed() == 0);
    CHECK(r.flagged() == 1);
    CHECK(r.passed() >= 49);
}

TEST_CASE("rules suite is fully sound") {
    SuiteReport r = run_rules_suite();
    CHECK(r.failed() == 0);
    CHECK(r.flagged() == 0);
    CHECK(r.checks.size() == 23);
}

TEST_CASE("presentation suite at small bounds") {
    SuiteReport r = run_presentation_suite(small_bounds());
    INFO(to_json(r).dump(2));
    CHECK(r.failed() == 0);
    CHECK(r.flagged() == 0);
}

TEST_CASE("modules suite at small bounds") {
    SuiteReport r = run_modules_suite(small_bounds());
    INFO(to_json(r).dump(2));
    CHECK(r.failed() == 0);
    CHECK(r.flagged() == 1);
}

TEST_CASE("classification suite at small bounds") {
    SuiteReport r = run_classification_suite(small_bounds());
    INFO(to_json(r).dump(2));
    CHECK(r.failed() == 0);
    CHECK(r.flagged() == 0);
}

TEST_CASE("all is the union of the other suites") {
    SuiteBounds b;
    b.max_word_len = 2;
    b.max_d = 2;
    SuiteReport all = run_suite("all", b);
    std::size_t total = 0;
    for (const char* name : {"relations", "rules", "presentation", "modules", "classification"})
        total += run_suite(name, b).checks.size();
    CHECK(all.checks.size() == total);
    CHECK(all.failed() == 0);
    CHECK(all.flagged() == 2);
}

TEST_CASE("degenerate bounds still pass") {
    SuiteBounds b;
    b.max_word_len = 0;
    b.max_d = 0;
    SuiteReport all = run_suite("all", b);
    CHECK(all.failed() == 0);
    CHECK(all.flagged() == 2);
}

TEST_CASE("reports are deterministic") {
    SuiteBounds b;
    b.max_word_len = 2;
    b.max_d = 1;
    CHECK(to_json(run_suite("all", b)).dump() == to_json(run_suite("all", b)).dump());
}

TEST_CASE("unknown suites are rejected") {
    CHECK_THROWS_AS(run_suite("nope"), error);
}

TEST_CASE("check ids are unique across all suites") {
    SuiteBounds b;
    b.max_word_len = 2;
    b.max_d = 2;
    SuiteReport all = run_suite("all", b);
    std::set<std::string> ids;
    for (const CheckResult& c : all.checks) {
        INFO(c.id);
        CHECK(ids.insert(c.id).second);
    }
}

TEST_CASE("numeric bound is honored") {
    SuiteBounds b;
    b.max_word_len = 1;
    b.max_d = 1;
    b.q = QValue(Rational(3));
    SuiteReport r = run_classification_suite(b);
    CHECK(r.failed() == 0);
}
