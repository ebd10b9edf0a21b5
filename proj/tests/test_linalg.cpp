#include <catch2/catch_amalgamated.hpp>

#include "qeven/linalg.hpp"
#include "test_util.hpp"

using namespace qeven;

namespace {
Laurent q(int k) { return Laurent::q_power(k); }
}

TEST_CASE("ratfunc arithmetic and canonical form") {
    RatFunc a(q(2) - Laurent(1), q(1) - Laurent(1));   // (q^2-1)/(q-1) = q+1
    CHECK(a.is_laurent());
    CHECK(a.as_laurent() == q(1) + Laurent(1));

    RatFunc b(Laurent(1), q(1) - q(-1));
    RatFunc c = b * RatFunc(q(1) - q(-1));
    CHECK(c.is_laurent());
    CHECK(c.as_laurent() == Laurent(1));

    RatFunc d = RatFunc(q(1)) / RatFunc(q(2) + Laurent(1));
    CHECK(!d.is_laurent());
    CHECK(d + (-d) == RatFunc());
    CHECK((d / d) == RatFunc(1));
    CHECK_THROWS_AS(d / RatFunc(), division_by_zero);
}

TEST_CASE("ratfunc field properties on random values") {
    testing::Rng rng(24601);
    for (int rep = 0; rep < 150; ++rep) {
        RatFunc a(testing::random_laurent(rng, 3, 3), testing::random_nonzero_laurent(rng, 2, 2));
        RatFunc b(testing::random_laurent(rng, 3, 3), testing::random_nonzero_laurent(rng, 2, 2));
        RatFunc c(testing::random_laurent(rng, 3, 3), testing::random_nonzero_laurent(rng, 2, 2));
        CHECK((a + b) * c == a * c + b * c);
        CHECK(a * b == b * a);
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}

TEST_CASE("rank and kernel over the rationals") {
    Matrix<Rational> m(3, 3);
    m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
    m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
    m(2, 0) = 1; m(2, 1) = 0; m(2, 2) = 1;
    CHECK(rank(m) == 2);
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    for (std::size_t i = 0; i < 3; ++i) {
        Rational acc(0);
        for (std::size_t j = 0; j < 3; ++j) acc += m(i, j) * ker[0][j];
        CHECK(acc == 0);
    }
}

TEST_CASE("kernel over the rational function field") {
    // [ q  1 ] has kernel spanned by (1, -q)
    Matrix<RatFunc> m(1, 2);
    m(0, 0) = RatFunc(q(1));
    m(0, 1) = RatFunc(Laurent(1));
    auto ker = kernel_basis(m);
    REQUIRE(ker.size() == 1);
    CHECK(m.apply(ker[0]) == std::vector<RatFunc>{RatFunc()});
}

TEST_CASE("inverse") {
    Matrix<Rational> m(2, 2);
    m(0, 0) = 2; m(0, 1) = 1;
    m(1, 0) = 5; m(1, 1) = 3;
    auto inv = try_inverse(m);
    REQUIRE(inv.has_value());
    CHECK((*inv * m) == Matrix<Rational>::identity(2));
    CHECK((m * *inv) == Matrix<Rational>::identity(2));

    Matrix<Rational> sing(2, 2);
    sing(0, 0) = 1; sing(0, 1) = 2;
    sing(1, 0) = 2; sing(1, 1) = 4;
    CHECK(!try_inverse(sing).has_value());
}

TEST_CASE("span tracker") {
    SpanTracker<Rational> span(3);
    CHECK(span.insert({Rational(1), Rational(0), Rational(1)}));
    CHECK(!span.insert({Rational(2), Rational(0), Rational(2)}));
    CHECK(span.insert({Rational(0), Rational(1), Rational(0)}));
    CHECK(span.dim() == 2);
    CHECK(!span.full());
    CHECK(span.insert({Rational(0), Rational(0), Rational(5)}));
    CHECK(span.full());
}

TEST_CASE("matrix products against evaluation") {
    testing::Rng rng(777);
    const QValue at{Rational(3, 2)};
    for (int rep = 0; rep < 40; ++rep) {
        Matrix<Laurent> a(3, 3), b(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) {
                a(i, j) = testing::random_laurent(rng, 2, 3);
                b(i, j) = testing::random_laurent(rng, 2, 3);
            }
        CHECK(eval_matrix(a * b, at) == eval_matrix(a, at) * eval_matrix(b, at));
    }
}
