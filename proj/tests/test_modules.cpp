#include <catch2/catch_amalgamated.hpp>

#include "qeven/modules.hpp"
#include "test_util.hpp"

using namespace qeven;

namespace {
Laurent q(int k) { return Laurent::q_power(k); }
NCPoly aw(std::initializer_list<Gen> g) {
    return NCPoly::from_word(Word(Alphabet::A, std::vector<Gen>(g)));
}

Matrix<Rational> random_invertible(testing::Rng& rng, std::size_t n) {
    std::uniform_int_distribution<int> entry(-4, 4);
    for (;;) {
        Matrix<Rational> p(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) p(i, j) = entry(rng);
        if (try_inverse(p)) return p;
    }
}
} // namespace

TEST_CASE("build_L_eps small cases") {
    ModuleRep m0 = build_L_eps(0, 1);
    CHECK(m0.action(Gen::X) == Matrix<Laurent>::identity(1));
    CHECK(m0.action(Gen::Y) == Matrix<Laurent>::identity(1));
    CHECK(m0.action(Gen::Z) == Matrix<Laurent>::identity(1));

    ModuleRep m1 = build_L_eps(1, 1);
    CHECK(m1.action(Gen::Z)(0, 0) == q(-1));
    CHECK(m1.action(Gen::Z)(1, 1) == q(1));
    CHECK(m1.action(Gen::Z)(0, 1).is_zero());

    ModuleRep m1n = build_L_eps(1, -1);
    CHECK(m1n.action(Gen::Z)(0, 0) == -q(-1));
    CHECK(m1n.action(Gen::Z)(1, 1) == -q(1));
}

TEST_CASE("U modules satisfy the equitable relations") {
    for (int d = 0; d <= 5; ++d)
        for (int eps : {1, -1}) {
            ModuleRep m = build_L_eps(d, eps);
            INFO("d=" << d << " eps=" << eps);
            CHECK(check_module_relations(m).all_pass());
        }
}

TEST_CASE("build_L small cases") {
    ModuleRep m0 = build_L(0);
    for (Gen g : {Gen::NX, Gen::NY, Gen::NZ}) CHECK(m0.action(g).is_zero());
    for (Gen g : {Gen::X2, Gen::Y2, Gen::Z2})
        CHECK(m0.action(g) == Matrix<Laurent>::identity(1));

    ModuleRep m1 = build_L(1);
    CHECK(m1.action(Gen::NX)(1, 0) == q(-1) * (Laurent(1) - q(2)));
    CHECK(m1.action(Gen::NX)(0, 0).is_zero());
    CHECK(m1.action(Gen::NX)(0, 1).is_zero());
    CHECK(m1.action(Gen::NY)(0, 1) == q(1) * (Laurent(1) - q(-2)));

    for (int d = 0; d <= 6; ++d) {
        ModuleRep m = build_L(d);
        for (int i = 0; i <= d; ++i) CHECK(m.action(Gen::Z2)(i, i) == q(4 * i - 2 * d));
    }
}

TEST_CASE("restriction to the even subalgebra is eps independent and matches build_L") {
    for (int d = 0; d <= 5; ++d) {
        ModuleRep plus = restrict_to_A(build_L_eps(d, 1));
        ModuleRep minus = restrict_to_A(build_L_eps(d, -1));
        ModuleRep direct = build_L(d);
        for (Gen g : a_generators()) {
            INFO("d=" << d << " gen=" << gen_name(g));
            CHECK(plus.action(g) == minus.action(g));
            CHECK(plus.action(g) == direct.action(g));
        }
    }
}

TEST_CASE("act evaluates words and polynomials") {
    ModuleRep m = build_L(2);
    CHECK(act(NCPoly::unit(Alphabet::A), m) == Matrix<Laurent>::identity(3));
    for (int d = 0; d <= 5; ++d) {
        ModuleRep L = build_L(d);
        CHECK(act(pow(aw({Gen::NX}), d + 1), L).is_zero());
        CHECK(!act(pow(aw({Gen::NX}), d), L).is_zero());
    }
    const auto& rel = a_defining_relations().front();
    CHECK((act(rel.lhs, build_L(3)) - act(rel.rhs, build_L(3))).is_zero());
}

TEST_CASE("module relations hold for build_L and fail for corrupted actions") {
    for (int d = 0; d <= 6; ++d) {
        INFO("d=" << d);
        CHECK(check_module_relations(build_L(d)).all_pass());
    }
    ModuleRep bad = build_L(2);
    bad.actions.at(Gen::NZ)(0, 0) += Laurent(1);
    CHECK(!check_module_relations(bad).all_pass());
}

TEST_CASE("nilpotency indices") {
    for (int d = 0; d <= 6; ++d) {
        ModuleRep m = build_L(d);
        for (Gen g : {Gen::NX, Gen::NY}) {
            CHECK(pow(m.action(g), d + 1).is_zero());
            if (d >= 1) CHECK(!pow(m.action(g), d).is_zero());
        }
        CHECK(pow(m.action(Gen::NZ), d + 1).is_zero());
    }
}

TEST_CASE("irreducibility") {
    for (int d = 0; d <= 6; ++d) {
        INFO("d=" << d);
        CHECK(check_irreducible(build_L(d)));
    }
    CHECK(!check_irreducible(direct_sum(build_L(0), build_L(1))));

    // numeric mode handles a change of basis
    testing::Rng rng(5551212);
    const QValue q2{Rational(2)};
    ModuleRep numeric = eval_module(build_L(2), q2);
    ModuleRep twisted = conjugated(numeric, random_invertible(rng, 3));
    CHECK(check_irreducible(twisted));
    CHECK(!check_irreducible(conjugated(eval_module(direct_sum(build_L(0), build_L(1)), q2),
                                        random_invertible(rng, 3))));
}

TEST_CASE("symbolic irreducibility needs a diagonal z^2") {
    ModuleRep m = build_L(1);
    Matrix<Laurent> z2 = m.action(Gen::Z2);
    z2(0, 1) = Laurent(1);
    m.actions.at(Gen::Z2) = z2;
    CHECK_THROWS_AS(check_irreducible(m), not_applicable);
}

TEST_CASE("solve_alpha closed form") {
    HWData hw = solve_alpha(3);
    CHECK(hw.lambda == q(-6));
    CHECK(hw.alpha.size() == 5);
    CHECK(hw.alpha[0].is_zero());
    CHECK(hw.alpha[4].is_zero());
    CHECK(hw.alpha[1] == (q(2) - Laurent(1)) * (q(-6) - Laurent(1)));
    // recurrence re-verified inside solve_alpha; spot-check one step
    CHECK(hw.alpha[2] == q(2) * hw.alpha[1] + (q(2) - Laurent(1)) * (q(4) * hw.lambda - Laurent(1)));
}

TEST_CASE("extraction recovers the ladder data symbolically") {
    for (int d = 0; d <= 6; ++d) {
        INFO("d=" << d);
        HWData got = extract_highest_weight(build_L(d));
        HWData expect = solve_alpha(d);
        CHECK(got.d == d);
        CHECK(got.lambda == expect.lambda);
        CHECK(got.alpha == expect.alpha);
        CHECK(got.basis.rows() == static_cast<std::size_t>(d) + 1);
        CHECK(got.basis.cols() == static_cast<std::size_t>(d) + 1);
    }
    HWData zero = extract_highest_weight(build_L(0));
    CHECK(zero.d == 0);
    CHECK(zero.lambda == Laurent(1));
    CHECK(zero.alpha == std::vector<Laurent>{Laurent(), Laurent()});
}

TEST_CASE("extraction is conjugation invariant in numeric mode") {
    testing::Rng rng(864);
    const QValue at{Rational(3, 2)};
    ModuleRep numeric = eval_module(build_L(3), at);
    ModuleRep twisted = conjugated(numeric, random_invertible(rng, 4));
    HWData got = extract_highest_weight(twisted);
    CHECK(got.d == 3);
    CHECK(got.lambda == Laurent(rational_pow(Rational(3, 2), -6)));
    HWData sym = solve_alpha(3);
    for (int i = 0; i <= 4; ++i)
        CHECK(got.alpha[i] == Laurent(sym.alpha[i].eval(Rational(3, 2))));
}

TEST_CASE("extraction error paths") {
    // two-dimensional trivial nu_y kernel
    ModuleRep sum = direct_sum(build_L(0), build_L(0));
    CHECK_THROWS_AS(extract_highest_weight(sum), kernel_too_large);

    // top vector fails to be a z^2 eigenvector
    Matrix<Laurent> ny(2, 2), nx(2, 2), z2(2, 2);
    ny(0, 1) = Laurent(1);
    z2(0, 1) = Laurent(1);
    z2(1, 0) = Laurent(1);
    ModuleRep fake{Alphabet::A, 2,
                   {{Gen::NX, nx}, {Gen::NY, ny}, {Gen::Z2, z2}},
                   std::nullopt};
    CHECK_THROWS_AS(extract_highest_weight(fake), not_eigen);
}

TEST_CASE("gamma intertwiner") {
    auto gamma = gamma_iso(2);
    REQUIRE(gamma.size() == 3);
    CHECK(gamma[0] == Laurent(1));
    CHECK(gamma[1] == q(-1) * (Laurent(1) - q(2)));
    CHECK(gamma[2] == q(-2) * (Laurent(1) - q(2)) * (Laurent(1) - q(4)));
    for (int d = 0; d <= 6; ++d) {
        auto g = gamma_iso(d);
        for (const Laurent& c : g) CHECK(!c.is_zero());
    }
}

TEST_CASE("abstract v-basis module satisfies the relations") {
    for (int d = 0; d <= 5; ++d) {
        INFO("d=" << d);
        CHECK(check_module_relations(v_basis_module(d)).all_pass());
    }
}

TEST_CASE("hom spaces") {
    const QValue q2{Rational(2)};
    for (int d = 0; d <= 4; ++d) {
        ModuleRep a = eval_module(restrict_to_A(build_L_eps(d, 1)), q2);
        ModuleRep b = eval_module(restrict_to_A(build_L_eps(d, -1)), q2);
        INFO("d=" << d);
        CHECK(hom_space_dim(a, b) == 1);
        ModuleRep ua = eval_module(build_L_eps(d, 1), q2);
        ModuleRep ub = eval_module(build_L_eps(d, -1), q2);
        CHECK(hom_space_dim(ua, ub) == 0);
        CHECK(hom_space_dim(ua, ua) == 1);
    }
    // symbolic mode agrees on a small case
    CHECK(hom_space_dim(restrict_to_A(build_L_eps(2, 1)), restrict_to_A(build_L_eps(2, -1))) == 1);
    CHECK(hom_space_dim(build_L_eps(1, 1), build_L_eps(1, -1)) == 0);
    // the gamma intertwiner is unique up to scalar
    CHECK(hom_space_dim(v_basis_module(2), build_L(2)) == 1);
}
