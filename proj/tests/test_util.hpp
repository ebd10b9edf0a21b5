#pragma once

#include <random>
#include <vector>

#include "qeven/ncpoly.hpp"

namespace qeven::testing {

using Rng = std::mt19937_64;

inline Laurent random_laurent(Rng& rng, int max_terms = 4, int exp_range = 6) {
    std::uniform_int_distribution<int> n_terms(0, max_terms);
    std::uniform_int_distribution<int> exp(-exp_range, exp_range);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 4);
    Laurent out;
    const int n = n_terms(rng);
    for (int i = 0; i < n; ++i)
        out += Laurent::monomial(Rational(num(rng), den(rng)), exp(rng));
    return out;
}

inline Laurent random_nonzero_laurent(Rng& rng, int max_terms = 4, int exp_range = 6) {
    for (;;) {
        Laurent l = random_laurent(rng, max_terms, exp_range);
        if (!l.is_zero()) return l;
    }
}

inline Word random_word(Rng& rng, Alphabet a, std::size_t len) {
    std::vector<Gen> letters;
    letters.reserve(len);
    if (a == Alphabet::U) {
        std::uniform_int_distribution<int> pick(0, 2);
        for (std::size_t i = 0; i < len; ++i) letters.push_back(u_generators()[pick(rng)]);
    } else {
        std::uniform_int_distribution<int> pick(0, 5);
        for (std::size_t i = 0; i < len; ++i) letters.push_back(a_generators()[pick(rng)]);
    }
    return Word(a, std::move(letters));
}

inline NCPoly random_ncpoly(Rng& rng, Alphabet a, int max_terms = 3, std::size_t max_len = 4) {
    std::uniform_int_distribution<int> n_terms(0, max_terms);
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    NCPoly out(a);
    const int n = n_terms(rng);
    for (int i = 0; i < n; ++i)
        out.add_term(random_word(rng, a, len(rng)), random_laurent(rng, 2, 3));
    return out;
}

} // namespace qeven::testing
