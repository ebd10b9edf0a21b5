#pragma once

#include <cassert>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qeven/ncpoly.hpp"

namespace qeven {

/*
 * Ground truth for the whole library: rewrite any element of the free
 * algebra on x, y, z into the ordered basis x^r y^s z^t using the three
 * flip relations
 *
 *     yx = q^2 xy - q^2 + 1
 *     zy = q^2 yz - q^2 + 1
 *     zx = q^-2 xz - q^-2 + 1
 *
 * right-to-left.  Each application either keeps the length and removes one
 * inversion (the swap term) or drops two letters (the scalar term), so the
 * measure (length, inversion count) strictly decreases and rewriting
 * terminates.  The ordered monomials form a basis, so normal forms are
 * unique; the confluence property tests double-check the implementation.
 */

enum class RewriteStrategy { leftmost, rightmost };

namespace detail {

struct Flip {
    Laurent swap_coeff;
    Laurent const_coeff;
};

// flip data for an adjacent inversion g_hi g_lo with g_hi > g_lo
inline const Flip& flip_for(Gen hi, Gen lo) {
    static const Flip yx{Laurent::q_power(2), Laurent(1) - Laurent::q_power(2)};
    static const Flip zy{Laurent::q_power(2), Laurent(1) - Laurent::q_power(2)};
    static const Flip zx{Laurent::q_power(-2), Laurent(1) - Laurent::q_power(-2)};
    if (hi == Gen::Y && lo == Gen::X) return yx;
    if (hi == Gen::Z && lo == Gen::Y) return zy;
    assert(hi == Gen::Z && lo == Gen::X);
    return zx;
}

inline std::optional<std::size_t> find_inversion(const Word& w, RewriteStrategy s) {
    if (w.size() < 2) return std::nullopt;
    if (s == RewriteStrategy::leftmost) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) return i;
    } else {
        for (std::size_t i = w.size() - 1; i-- > 0;)
            if (w[i] > w[i + 1]) return i;
    }
    return std::nullopt;
}

} // namespace detail

inline std::size_t inversion_count(const Word& w) {
    std::size_t n = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++n;
    return n;
}

// One flip applied at position i (precondition: w[i] > w[i+1]).  Returns
// the swap term and the two-letters-shorter scalar term.
inline std::pair<std::pair<Word, Laurent>, std::pair<Word, Laurent>> flip_at(const Word& w,
                                                                             std::size_t i) {
    assert(i + 1 < w.size() && w[i] > w[i + 1]);
    const detail::Flip& f = detail::flip_for(w[i], w[i + 1]);
    Word swapped(w.alphabet(), [&] {
        auto ls = w.letters();
        std::swap(ls[i], ls[i + 1]);
        return ls;
    }());
    Word dropped = w.splice2(i, Word::empty(w.alphabet()));
    return {{std::move(swapped), f.swap_coeff}, {std::move(dropped), f.const_coeff}};
}

inline bool is_pbw_word(const Word& w) {
    if (w.alphabet() != Alphabet::U) return false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i] > w[i + 1]) return false;
    return true;
}

inline Word pbw_word(unsigned r, unsigned s, unsigned t) {
    std::vector<Gen> ls;
    ls.reserve(r + s + t);
    ls.insert(ls.end(), r, Gen::X);
    ls.insert(ls.end(), s, Gen::Y);
    ls.insert(ls.end(), t, Gen::Z);
    return Word(Alphabet::U, std::move(ls));
}

/*
 * An element of the algebra expressed in the ordered basis: every
 * supported word has shape x^r y^s z^t.  Two PBWForms are equal as algebra
 * elements iff structurally equal.
 */
class PBWForm {
public:
    explicit PBWForm(NCPoly p) : poly_(std::move(p)) {
        require_same_alphabet(poly_.alphabet(), Alphabet::U);
        for (const auto& [w, c] : poly_.terms()) assert(is_pbw_word(w));
    }

    struct Term {
        unsigned r, s, t;
        Laurent coeff;
    };

    const NCPoly& poly() const noexcept { return poly_; }
    bool is_zero() const noexcept { return poly_.is_zero(); }
    bool operator==(const PBWForm&) const = default;
    std::string str() const { return poly_.str(); }

    std::vector<Term> monomials() const {
        std::vector<Term> out;
        out.reserve(poly_.term_count());
        for (const auto& [w, c] : poly_.terms()) {
            Term t{0, 0, 0, c};
            for (Gen g : w) {
                if (g == Gen::X)
                    ++t.r;
                else if (g == Gen::Y)
                    ++t.s;
                else
                    ++t.t;
            }
            out.push_back(std::move(t));
        }
        return out;
    }

private:
    NCPoly poly_;
};

inline PBWForm normalize(const NCPoly& p, RewriteStrategy strategy = RewriteStrategy::leftmost) {
    require_same_alphabet(p.alphabet(), Alphabet::U);
    NCPoly done(Alphabet::U);
    // Pending terms merge by word, which keeps the intermediate support
    // polynomial even for badly inverted inputs.  Longest pending words are
    // rewritten first so shorter descendants merge early.
    std::map<Word, Laurent> pending;
    for (const auto& [w, c] : p.terms()) {
        if (is_pbw_word(w))
            done.add_term(w, c);
        else
            pending.emplace(w, c);
    }
    while (!pending.empty()) {
        auto node = pending.extract(std::prev(pending.end()));
        const Word& w = node.key();
        const Laurent& c = node.mapped();
        auto pos = detail::find_inversion(w, strategy);
        assert(pos.has_value());
        auto [swap_term, const_term] = flip_at(w, *pos);
        assert(swap_term.first.size() == w.size() &&
               inversion_count(swap_term.first) + 1 == inversion_count(w));
        assert(const_term.first.size() + 2 == w.size());
        for (auto* out : {&swap_term, &const_term}) {
            Word& ow = out->first;
            Laurent oc = out->second * c;
            if (oc.is_zero()) continue;
            if (is_pbw_word(ow)) {
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
    return PBWForm(std::move(done));
}

// Images of the A-alphabet letters inside the oracle:
// nu_x = q(1 - yz), nu_y = q(1 - zx), nu_z = q(1 - xy), and the squares.
inline const NCPoly& expand(Gen a_sym) {
    static const auto table = [] {
        auto nu = [](Gen g1, Gen g2) {
            NCPoly p = NCPoly::scalar(Alphabet::U, Laurent::q_power(1));
            p.add_term(Word{g1, g2}, -Laurent::q_power(1));
            return p;
        };
        auto sq = [](Gen g) { return NCPoly::from_word(Word{g, g}); };
        return std::map<Gen, NCPoly>{
            {Gen::NX, nu(Gen::Y, Gen::Z)}, {Gen::NY, nu(Gen::Z, Gen::X)},
            {Gen::NZ, nu(Gen::X, Gen::Y)}, {Gen::X2, sq(Gen::X)},
            {Gen::Y2, sq(Gen::Y)},         {Gen::Z2, sq(Gen::Z)},
        };
    }();
    auto it = table.find(a_sym);
    if (it == table.end())
        throw alphabet_mismatch("expand: not an A-alphabet symbol");
    return it->second;
}

// Multiplicative/linear extension of expand to the whole A-algebra.
inline NCPoly expand_all(const NCPoly& p) {
    require_same_alphabet(p.alphabet(), Alphabet::A);
    NCPoly out(Alphabet::U);
    for (const auto& [w, c] : p.terms()) {
        NCPoly prod = NCPoly::scalar(Alphabet::U, c);
        for (Gen g : w) prod *= expand(g);
        out += prod;
    }
    return out;
}

inline bool check_identity(const NCPoly& lhs, const NCPoly& rhs) {
    require_same_alphabet(lhs.alphabet(), rhs.alphabet());
    return normalize(lhs - rhs).is_zero();
}

} // namespace qeven
