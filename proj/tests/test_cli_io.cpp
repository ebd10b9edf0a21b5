#include <catch2/catch_amalgamated.hpp>

#include "qeven/json_io.hpp"
#include "test_util.hpp"

using namespace qeven;

TEST_CASE("module JSON round trip") {
    ModuleRep m = build_L(2);
    json j = to_json(m);
    CHECK(j["dim"] == 3);
    CHECK(j["actions"].size() == 6);
    ModuleRep back = module_from_json(j);
    CHECK(back.alphabet == Alphabet::A);
    CHECK(back.dim == m.dim);
    for (const auto& [g, mat] : m.actions) CHECK(back.action(g) == mat);
}

TEST_CASE("module JSON with q becomes numeric") {
    json j = to_json(build_L(1));
    j["q"] = "2";
    ModuleRep m = module_from_json(j);
    REQUIRE(m.numeric());
    CHECK(m.q->value() == 2);
    // entries are constants
    for (const auto& [g, mat] : m.actions)
        for (std::size_t i = 0; i < mat.rows(); ++i)
            for (std::size_t j2 = 0; j2 < mat.cols(); ++j2) CHECK(mat(i, j2).is_constant());
    // classification works on the numeric module
    HWData hw = extract_highest_weight(m);
    CHECK(hw.d == 1);
}

TEST_CASE("module JSON validation") {
    CHECK_THROWS_AS(module_from_json(json{{"dim", 2}}), error);
    json bad{{"dim", 2}, {"actions", {{"x", json::array({json::array({"1", "0"})})}}}};
    CHECK_THROWS_AS(module_from_json(bad), error);
    json mixed = to_json(build_L(1));
    mixed["actions"]["x"] = to_json(build_L_eps(1, 1).action(Gen::X));
    CHECK_THROWS_AS(module_from_json(mixed), error);
}

TEST_CASE("pbw JSON shape") {
    PBWForm nf = normalize(parse_expr("y*x", Alphabet::U));
    json j = to_json(nf);
    REQUIRE(j.is_array());
    REQUIRE(j.size() == 2);
    CHECK(j[0]["r"] == 0);
    CHECK(j[0]["coeff"] == "1 - q^2");
    CHECK(j[1]["r"] == 1);
    CHECK(j[1]["s"] == 1);
    CHECK(j[1]["t"] == 0);
    CHECK(j[1]["coeff"] == "q^2");
}

TEST_CASE("normal form JSON re-parses to equal values") {
    NormalForm nf = reduce(parse_expr("nx*nx", Alphabet::A));
    json j = to_json(nf);
    NCPoly back(Alphabet::A);
    for (const auto& entry : j) {
        NCPoly w = parse_expr(entry["word"].get<std::string>(), Alphabet::A);
        REQUIRE(w.term_count() == 1);
        back += parse_laurent(entry["coeff"].get<std::string>()) * w;
    }
    CHECK(back == nf.poly());
}

TEST_CASE("matrix JSON entries re-parse") {
    testing::Rng rng(31337);
    Matrix<Laurent> m(2, 3);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) m(i, j) = testing::random_laurent(rng);
    CHECK(matrix_from_json(to_json(m)) == m);
}

TEST_CASE("suite report JSON") {
    SuiteBounds b;
    b.max_word_len = 1;
    b.max_d = 0;
    json j = to_json(run_suite("rules", b));
    CHECK(j["suite"] == "rules");
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["checks"].is_array());
}
