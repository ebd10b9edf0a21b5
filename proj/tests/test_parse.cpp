#include <catch2/catch_amalgamated.hpp>

#include "qeven/oracle.hpp"
#include "qeven/parse.hpp"
#include "test_util.hpp"

using namespace qeven;

namespace {
Laurent q(int k) { return Laurent::q_power(k); }
}

TEST_CASE("parse basic expressions") {
    CHECK(parse_expr("y*x", Alphabet::U) == NCPoly::from_word(Word{Gen::Y, Gen::X}));
    CHECK(parse_expr("y x", Alphabet::U) == parse_expr("y*x", Alphabet::U));
    CHECK(parse_expr("nx^2", Alphabet::A) == NCPoly::from_word(Word{Gen::NX, Gen::NX}));

    // (q)*1 - (q)*x*y is the image of nz
    CHECK(parse_expr("(q)*1 - (q)*x*y", Alphabet::U) == expand(Gen::NZ));
    CHECK(parse_expr("q - q*x*y", Alphabet::U) == expand(Gen::NZ));
}

TEST_CASE("parse coefficients") {
    CHECK(parse_expr("3", Alphabet::U) == NCPoly::scalar(Alphabet::U, Laurent(3)));
    CHECK(parse_expr("1/2*q^-3", Alphabet::U) ==
          NCPoly::scalar(Alphabet::U, Laurent::monomial(Rational(1, 2), -3)));
    CHECK(parse_expr("(q + q^3)*nx", Alphabet::A) ==
          (q(1) + q(3)) * NCPoly::from_word(Word{Gen::NX}));
    CHECK(parse_expr("-q^4 + (q + q^3)*nx + q^4*y2*z2", Alphabet::A).term_count() == 3);
    CHECK(parse_laurent("q^2 - 1 + 1/2*q^-3") ==
          q(2) - Laurent(1) + Laurent::monomial(Rational(1, 2), -3));
}

TEST_CASE("syntax errors carry positions") {
    CHECK_THROWS_AS(parse_expr("x +", Alphabet::U), syntax_error);
    CHECK_THROWS_AS(parse_expr("x^0", Alphabet::U), syntax_error);
    CHECK_THROWS_AS(parse_expr("x^-2", Alphabet::U), syntax_error);
    CHECK_THROWS_AS(parse_expr("foo", Alphabet::U), syntax_error);
    CHECK_THROWS_AS(parse_expr("(x)", Alphabet::U), syntax_error);
    CHECK_THROWS_AS(parse_expr("1/0", Alphabet::U), syntax_error);
    try {
        parse_expr("x + $", Alphabet::U);
        FAIL("expected a syntax error");
    } catch (const syntax_error& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("alphabet mismatches") {
    CHECK_THROWS_AS(parse_expr("x2", Alphabet::U), alphabet_mismatch);
    CHECK_THROWS_AS(parse_expr("x", Alphabet::A), alphabet_mismatch);
    CHECK_THROWS_AS(parse_expr("nx*y", Alphabet::A), alphabet_mismatch);
}

TEST_CASE("parse rational") {
    CHECK(parse_rational("3/2") == Rational(3, 2));
    CHECK(parse_rational("-5") == Rational(-5));
    CHECK_THROWS_AS(parse_rational("q"), syntax_error);
}

TEST_CASE("print/parse round trip on random values") {
    testing::Rng rng(424242);
    for (int rep = 0; rep < 1000; ++rep) {
        Alphabet al = rep % 2 ? Alphabet::U : Alphabet::A;
        NCPoly p = testing::random_ncpoly(rng, al, 4, 5);
        INFO(p.str());
        CHECK(parse_expr(p.str(), al) == p);
    }
    for (int rep = 0; rep < 500; ++rep) {
        Laurent l = testing::random_laurent(rng, 5, 8);
        INFO(l.str());
        CHECK(parse_laurent(l.str()) == l);
    }
}
