#pragma once

#include <array>
#include <cassert>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "qeven/oracle.hpp"

namespace qeven {

/*
 * The presented algebra on the A alphabet.  Length-2 words split into
 * allowed and forbidden per the classification table below; every
 * forbidden pair carries one reduction rule rewriting it as a linear
 * combination of allowed words of length <= 2.  Iterating the rules on
 * the leftmost forbidden adjacent pair terminates because every step
 * strictly decreases (word length, forbidden-pair count) lexicographically,
 * and lands on the allowed-word basis:
 *
 *     x^2r nz^d1 y^2s nx^d2 z^2t      and      x^2r ny z^2t.
 */

namespace detail {

// Allowed entries of the 6x6 pair table, indexed nx, ny, nz, x2, y2, z2.
inline constexpr std::array<std::array<bool, 6>, 6> allowed_pair_table{{
    //            nx     ny     nz     x2     y2     z2
    /* nx */ {false, false, false, false, false, true},
    /* ny */ {false, false, false, false, false, true},
    /* nz */ {true, false, false, false, true, true},
    /* x2 */ {true, true, true, true, true, true},
    /* y2 */ {true, false, false, false, true, true},
    /* z2 */ {false, false, false, false, false, true},
}};

inline constexpr std::size_t a_index(Gen g) {
    return static_cast<std::size_t>(g) - static_cast<std::size_t>(Gen::NX);
}

} // namespace detail

enum class PairClass { allowed, forbidden };

inline PairClass classify_pair(Gen g1, Gen g2) {
    require_same_alphabet(alphabet_of(g1), Alphabet::A);
    require_same_alphabet(alphabet_of(g2), Alphabet::A);
    return detail::allowed_pair_table[detail::a_index(g1)][detail::a_index(g2)]
               ? PairClass::allowed
               : PairClass::forbidden;
}

inline bool pair_allowed(Gen g1, Gen g2) { return classify_pair(g1, g2) == PairClass::allowed; }

// A word is allowed iff no adjacent pair is forbidden; words of length
// <= 1 are allowed.
inline bool is_allowed(const Word& w) {
    require_same_alphabet(w.alphabet(), Alphabet::A);
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (!pair_allowed(w[i], w[i + 1])) return false;
    return true;
}

// Count of pairs (i, j), i < j, with w[i] w[j] forbidden; the second
// component of the termination order.  Adjacency is not required.
inline std::size_t forbidden_pair_count(const Word& w) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (!pair_allowed(w[i], w[j])) ++n;
    return n;
}

// All allowed words of length <= max_len in (length, lex) order.
inline std::vector<Word> enumerate_allowed(int max_len) {
    std::vector<Word> out;
    std::vector<Word> frontier{Word::empty(Alphabet::A)};
    for (int len = 0; len <= max_len; ++len) {
        out.insert(out.end(), frontier.begin(), frontier.end());
        if (len == max_len) break;
        std::vector<Word> next;
        for (const Word& w : frontier)
            for (Gen g : a_generators())
                if (w.is_empty() || pair_allowed(w[w.size() - 1], g)) next.push_back(w.appended(g));
        frontier = std::move(next);
    }
    return out;
}

/*
 * One reduction rule: a forbidden length-2 word on the left, a linear
 * combination of allowed words of length <= 2 on the right, exactly one of
 * which has length 2 (the distinguished word).  For 12 of the 21 rules the
 * distinguished word is just the transposed pair.
 */
struct ReductionRule {
    Gen lhs1, lhs2;
    NCPoly rhs;
    Word distinguished;
    bool distinguished_is_swap;

    Word lhs_word() const { return Word{lhs1, lhs2}; }
};

namespace detail {

class RuleBuilder {
public:
    RuleBuilder(Gen g1, Gen g2) : g1_(g1), g2_(g2), rhs_(Alphabet::A) {}

    RuleBuilder& term(std::initializer_list<Gen> word, Laurent c) {
        rhs_.add_term(Word(Alphabet::A, std::vector<Gen>(word)), std::move(c));
        return *this;
    }

    ReductionRule build() {
        std::optional<Word> dist;
        for (const auto& [w, c] : rhs_.terms()) {
            assert(w.size() <= 2 && is_allowed(w));
            if (w.size() == 2) {
                assert(!dist);
                dist = w;
            }
        }
        assert(dist);
        bool swap = (*dist == Word{g2_, g1_});
        return ReductionRule{g1_, g2_, std::move(rhs_), std::move(*dist), swap};
    }

private:
    Gen g1_, g2_;
    NCPoly rhs_;
};

} // namespace detail

// The 21 rules, one per forbidden table entry, in row-major table order.
// Stored as data and machine-verified against the oracle (rules suite)
// rather than trusted.
inline const std::array<ReductionRule, 21>& reduction_rules() {
    using detail::RuleBuilder;
    using G = Gen;
    auto q = [](int k) { return Laurent::q_power(k); };
    static const std::array<ReductionRule, 21> rules = {
        // nx nx = q^4 y2 z2 + q^2(q + q^-1) nx - q^4
        RuleBuilder(G::NX, G::NX)
            .term({G::Y2, G::Z2}, q(4))
            .term({G::NX}, q(3) + q(1))
            .term({}, -q(4))
            .build(),
        // nx ny = -q^-1 nz z2 + q^-2 z2 + q^-3 nx + q ny - q^-2
        RuleBuilder(G::NX, G::NY)
            .term({G::NZ, G::Z2}, -q(-1))
            .term({G::Z2}, q(-2))
            .term({G::NX}, q(-3))
            .term({G::NY}, q(1))
            .term({}, -q(-2))
            .build(),
        // nx nz = q^2 nz nx + (q^2 - 1) y2 - (q^2 - 1)
        RuleBuilder(G::NX, G::NZ)
            .term({G::NZ, G::NX}, q(2))
            .term({G::Y2}, q(2) - Laurent(1))
            .term({}, Laurent(1) - q(2))
            .build(),
        // nx x2 = x2 nx - (q^2 - q^-2) ny + (q^2 - q^-2) nz
        RuleBuilder(G::NX, G::X2)
            .term({G::X2, G::NX}, Laurent(1))
            .term({G::NY}, q(-2) - q(2))
            .term({G::NZ}, q(2) - q(-2))
            .build(),
        // nx y2 = q^4 y2 nx
        RuleBuilder(G::NX, G::Y2).term({G::Y2, G::NX}, q(4)).build(),
        // ny nx = -q nz z2 + q^2 z2 + q^-1 nx + q^3 ny - q^2
        RuleBuilder(G::NY, G::NX)
            .term({G::NZ, G::Z2}, -q(1))
            .term({G::Z2}, q(2))
            .term({G::NX}, q(-1))
            .term({G::NY}, q(3))
            .term({}, -q(2))
            .build(),
        // ny ny = q^-4 x2 z2 + q^-2(q + q^-1) ny - q^-4
        RuleBuilder(G::NY, G::NY)
            .term({G::X2, G::Z2}, q(-4))
            .term({G::NY}, q(-1) + q(-3))
            .term({}, -q(-4))
            .build(),
        // ny nz = -q^-1 x2 nx + q^-2 x2 + q ny + q^-3 nz - q^-2
        RuleBuilder(G::NY, G::NZ)
            .term({G::X2, G::NX}, -q(-1))
            .term({G::X2}, q(-2))
            .term({G::NY}, q(1))
            .term({G::NZ}, q(-3))
            .term({}, -q(-2))
            .build(),
        // ny x2 = q^-4 x2 ny
        RuleBuilder(G::NY, G::X2).term({G::X2, G::NY}, q(-4)).build(),
        // ny y2 = -q nz nx + q^-1 y2 + q^-2 nz + q^2 nx - q^-1
        RuleBuilder(G::NY, G::Y2)
            .term({G::NZ, G::NX}, -q(1))
            .term({G::Y2}, q(-1))
            .term({G::NZ}, q(-2))
            .term({G::NX}, q(2))
            .term({}, -q(-1))
            .build(),
        // nz ny = -q x2 nx + q^2 x2 + q^3 ny + q^-1 nz - q^2
        RuleBuilder(G::NZ, G::NY)
            .term({G::X2, G::NX}, -q(1))
            .term({G::X2}, q(2))
            .term({G::NY}, q(3))
            .term({G::NZ}, q(-1))
            .term({}, -q(2))
            .build(),
        // nz nz = q^4 x2 y2 + q^2(q + q^-1) nz - q^4
        RuleBuilder(G::NZ, G::NZ)
            .term({G::X2, G::Y2}, q(4))
            .term({G::NZ}, q(3) + q(1))
            .term({}, -q(4))
            .build(),
        // nz x2 = q^4 x2 nz
        RuleBuilder(G::NZ, G::X2).term({G::X2, G::NZ}, q(4)).build(),
        // y2 ny = -q nz nx + q^-1 y2 + q^2 nz + q^-2 nx - q^-1
        RuleBuilder(G::Y2, G::NY)
            .term({G::NZ, G::NX}, -q(1))
            .term({G::Y2}, q(-1))
            .term({G::NZ}, q(2))
            .term({G::NX}, q(-2))
            .term({}, -q(-1))
            .build(),
        // y2 nz = q^4 nz y2
        RuleBuilder(G::Y2, G::NZ).term({G::NZ, G::Y2}, q(4)).build(),
        // y2 x2 = q^8 x2 y2 + (q^6 - q^2)(q + q^-1) nz + (1 - q^8)
        RuleBuilder(G::Y2, G::X2)
            .term({G::X2, G::Y2}, q(8))
            .term({G::NZ}, (q(6) - q(2)) * (q(1) + q(-1)))
            .term({}, Laurent(1) - q(8))
            .build(),
        // z2 nx = q^4 nx z2
        RuleBuilder(G::Z2, G::NX).term({G::NX, G::Z2}, q(4)).build(),
        // z2 ny = q^-4 ny z2
        RuleBuilder(G::Z2, G::NY).term({G::NY, G::Z2}, q(-4)).build(),
        // z2 nz = nz z2 + (q^2 - q^-2) nx - (q^2 - q^-2) ny
        RuleBuilder(G::Z2, G::NZ)
            .term({G::NZ, G::Z2}, Laurent(1))
            .term({G::NX}, q(2) - q(-2))
            .term({G::NY}, q(-2) - q(2))
            .build(),
        // z2 x2 = q^-8 x2 z2 + (q^-6 - q^-2)(q + q^-1) ny + (1 - q^-8)
        RuleBuilder(G::Z2, G::X2)
            .term({G::X2, G::Z2}, q(-8))
            .term({G::NY}, (q(-6) - q(-2)) * (q(1) + q(-1)))
            .term({}, Laurent(1) - q(-8))
            .build(),
        // z2 y2 = q^8 y2 z2 + (q^6 - q^2)(q + q^-1) nx + (1 - q^8)
        RuleBuilder(G::Z2, G::Y2)
            .term({G::Y2, G::Z2}, q(8))
            .term({G::NX}, (q(6) - q(2)) * (q(1) + q(-1)))
            .term({}, Laurent(1) - q(8))
            .build(),
    };
    return rules;
}

inline const ReductionRule& rule_for(Gen g1, Gen g2) {
    static const auto index = [] {
        std::map<std::pair<Gen, Gen>, const ReductionRule*> m;
        for (const auto& r : reduction_rules()) m.emplace(std::make_pair(r.lhs1, r.lhs2), &r);
        return m;
    }();
    auto it = index.find({g1, g2});
    assert(it != index.end());
    return *it->second;
}

/*
 * An element supported only on allowed words: the normal-form side of the
 * presented algebra.
 */
class NormalForm {
public:
    explicit NormalForm(NCPoly p) : poly_(std::move(p)) {
        require_same_alphabet(poly_.alphabet(), Alphabet::A);
        for (const auto& [w, c] : poly_.terms()) assert(is_allowed(w));
    }

    const NCPoly& poly() const noexcept { return poly_; }
    bool is_zero() const noexcept { return poly_.is_zero(); }
    bool operator==(const NormalForm&) const = default;
    std::string str() const { return poly_.str(); }

private:
    NCPoly poly_;
};

namespace detail {

inline std::optional<std::size_t> find_forbidden(const Word& w, RewriteStrategy s) {
    if (w.size() < 2) return std::nullopt;
    if (s == RewriteStrategy::leftmost) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (!pair_allowed(w[i], w[i + 1])) return i;
    } else {
        for (std::size_t i = w.size() - 1; i-- > 0;)
            if (!pair_allowed(w[i], w[i + 1])) return i;
    }
    return std::nullopt;
}

} // namespace detail

// Rewrite to the allowed-word basis.  Accepts arbitrary mixed words over
// all six letters; 0 and scalars pass through.  The step cap only guards
// against a corrupted rule table.
inline NormalForm reduce(const NCPoly& p, RewriteStrategy strategy = RewriteStrategy::leftmost) {
    require_same_alphabet(p.alphabet(), Alphabet::A);
    NCPoly done(Alphabet::A);
    std::map<Word, Laurent> pending;
    for (const auto& [w, c] : p.terms()) {
        if (is_allowed(w))
            done.add_term(w, c);
        else
            pending.emplace(w, c);
    }
    std::size_t steps = 0;
    // Generous cap: support can only shrink in the termination order, but a
    // wrong rule table could cycle.
    const std::size_t step_cap = 2'000'000 + 10'000 * p.term_count();
    while (!pending.empty()) {
        if (++steps > step_cap) throw non_termination();
        auto node = pending.extract(std::prev(pending.end()));
        const Word& w = node.key();
        const Laurent& c = node.mapped();
        auto pos = detail::find_forbidden(w, strategy);
        assert(pos.has_value());
        const ReductionRule& rule = rule_for(w[*pos], w[*pos + 1]);
#ifndef NDEBUG
        const auto measure = std::make_pair(w.size(), forbidden_pair_count(w));
#endif
        for (const auto& [mid, mc] : rule.rhs.terms()) {
            Word ow = w.splice2(*pos, mid);
            Laurent oc = mc * c;
            if (oc.is_zero()) continue;
            assert(std::make_pair(ow.size(), forbidden_pair_count(ow)) < measure);
            if (is_allowed(ow)) {
                done.add_term(std::move(ow), std::move(oc));
            } else {
                auto [it, inserted] = pending.try_emplace(std::move(ow), oc);
                if (!inserted) {
                    it->second += oc;
                    if (it->second.is_zero()) pending.erase(it);
                }
            }
        }
    }
    return NormalForm(std::move(done));
}

// phi sends nu_eta to nu_eta; concretely, the oracle-side image of an
// A-alphabet element.
inline PBWForm phi_image(const NCPoly& p) { return normalize(expand_all(p)); }

inline PBWForm phi_image(const Word& w) { return phi_image(NCPoly::from_word(w)); }

} // namespace qeven
