#pragma once

#include <map>
#include <string>
#include <utility>

#include "qeven/laurent.hpp"
#include "qeven/word.hpp"

namespace qeven {

/*
 * Finite linear combination of words with Laurent coefficients: the free
 * algebra over one alphabet.  Canonical form stores no zero coefficients,
 * keyed by the (length, lex) word order, so equality is structural and
 * printing is deterministic.
 */
class NCPoly {
public:
    explicit NCPoly(Alphabet a) : alpha_(a) {}

    static NCPoly zero(Alphabet a) { return NCPoly(a); }

    static NCPoly unit(Alphabet a) { return scalar(a, Laurent(1)); }

    static NCPoly scalar(Alphabet a, Laurent c) {
        NCPoly p(a);
        p.add_term(Word::empty(a), std::move(c));
        return p;
    }

    static NCPoly from_word(Word w, Laurent c = Laurent(1)) {
        NCPoly p(w.alphabet());
        p.add_term(std::move(w), std::move(c));
        return p;
    }

    Alphabet alphabet() const noexcept { return alpha_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const std::map<Word, Laurent>& terms() const noexcept { return terms_; }

    Laurent coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Laurent() : it->second;
    }

    void add_term(Word w, Laurent c) {
        require_same_alphabet(alpha_, w.alphabet());
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(std::move(w), c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    NCPoly& operator+=(const NCPoly& o) {
        require_same_alphabet(alpha_, o.alpha_);
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }

    NCPoly& operator-=(const NCPoly& o) {
        require_same_alphabet(alpha_, o.alpha_);
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }

    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }

    NCPoly operator-() const {
        NCPoly out(alpha_);
        for (const auto& [w, c] : terms_) out.terms_.emplace(w, -c);
        return out;
    }

    // Bilinear product: words concatenate.
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b) {
        require_same_alphabet(a.alpha_, b.alpha_);
        NCPoly out(a.alpha_);
        for (const auto& [wa, ca] : a.terms_)
            for (const auto& [wb, cb] : b.terms_) out.add_term(wa * wb, ca * cb);
        return out;
    }

    NCPoly& operator*=(const NCPoly& o) { return *this = *this * o; }

    friend NCPoly operator*(const Laurent& s, const NCPoly& p) { return p.scaled(s); }
    friend NCPoly operator*(const NCPoly& p, const Laurent& s) { return p.scaled(s); }

    NCPoly scaled(const Laurent& s) const {
        NCPoly out(alpha_);
        if (s.is_zero()) return out;
        for (const auto& [w, c] : terms_) out.terms_.emplace(w, c * s);
        return out;
    }

    bool operator==(const NCPoly&) const = default;

    /*
     * Terms print in ascending (length, lex) word order.  A monomial
     * coefficient fuses with the word ("q^2*x*y"); a multi-term coefficient
     * is parenthesized ("(1 - q^2)*nx"); the scalar part prints bare.
     */
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [w, c] : terms_) {
            if (w.is_empty()) {
                out = c.str();
                continue;
            }
            std::string coeff_txt;
            bool negative = false;
            if (c.is_monomial()) {
                auto [e, r] = *c.terms().begin();
                Rational mag = r;
                if (r < 0) {
                    negative = true;
                    mag = -r;
                }
                coeff_txt = Laurent::monomial(mag, e).str();
                if (coeff_txt == "1") coeff_txt.clear();
            } else {
                coeff_txt = "(" + c.str() + ")";
            }
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            if (!coeff_txt.empty()) out += coeff_txt + "*";
            out += w.str();
        }
        return out;
    }

private:
    Alphabet alpha_;
    std::map<Word, Laurent> terms_;
};

inline NCPoly pow(const NCPoly& base, unsigned n) {
    NCPoly acc = NCPoly::unit(base.alphabet());
    NCPoly b = base;
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

} // namespace qeven
