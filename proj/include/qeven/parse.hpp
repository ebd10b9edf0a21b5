#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qeven/ncpoly.hpp"

namespace qeven {

/*
 * Grammar (whitespace and '*' both separate factors):
 *
 *   expr    := ['-'] term { ('+' | '-') term }
 *   term    := atom { ['*'] atom }
 *   atom    := '(' laurent ')' | number | 'q' ['^' int] | gen ['^' posint]
 *   laurent := same shape, scalar atoms only
 *   number  := digits [ '/' digits ]
 *   gen     := x y z          (U alphabet)
 *            | nx ny nz x2 y2 z2   (A alphabet)
 *
 * Exponents may be negative on q only.  Non-monomial coefficients must be
 * parenthesized, which the atom grammar enforces by construction.
 */

namespace detail {

struct Token {
    enum Kind { number, ident, plus, minus, star, caret, lparen, rparen, slash, end };
    Kind kind;
    std::size_t pos;
    std::string text;
};

inline std::vector<Token> lex(std::string_view src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        const char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            out.push_back({Token::number, i, std::string(src.substr(i, j - i))});
            i = j;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])))) ++j;
            out.push_back({Token::ident, i, std::string(src.substr(i, j - i))});
            i = j;
            continue;
        }
        Token::Kind kind;
        switch (c) {
            case '+': kind = Token::plus; break;
            case '-': kind = Token::minus; break;
            case '*': kind = Token::star; break;
            case '^': kind = Token::caret; break;
            case '(': kind = Token::lparen; break;
            case ')': kind = Token::rparen; break;
            case '/': kind = Token::slash; break;
            default: throw syntax_error(i, std::string("unexpected character '") + c + "'");
        }
        out.push_back({kind, i, std::string(1, c)});
        ++i;
    }
    out.push_back({Token::end, src.size(), ""});
    return out;
}

inline std::optional<Gen> gen_from_name(std::string_view name) {
    for (Gen g : u_generators())
        if (gen_name(g) == name) return g;
    for (Gen g : a_generators())
        if (gen_name(g) == name) return g;
    return std::nullopt;
}

class Parser {
public:
    Parser(std::string_view src, Alphabet alphabet) : toks_(lex(src)), alpha_(alphabet) {}

    NCPoly parse_expr() {
        NCPoly out = parse_sum(false);
        expect(Token::end, "end of input");
        return out;
    }

    Laurent parse_laurent_only() {
        Laurent out = parse_laurent_sum();
        expect(Token::end, "end of input");
        return out;
    }

private:
    std::vector<Token> toks_;
    std::size_t at_ = 0;
    Alphabet alpha_;

    const Token& cur() const { return toks_[at_]; }
    void advance() { ++at_; }

    void expect(Token::Kind k, const char* what) {
        if (cur().kind != k)
            throw syntax_error(cur().pos, std::string("expected ") + what);
        advance();
    }

    bool starts_atom() const {
        return cur().kind == Token::number || cur().kind == Token::ident ||
               cur().kind == Token::lparen;
    }

    NCPoly parse_sum(bool) {
        NCPoly acc(alpha_);
        bool negate = false;
        if (cur().kind == Token::minus) {
            negate = true;
            advance();
        }
        acc += maybe_negate(parse_term(), negate);
        while (cur().kind == Token::plus || cur().kind == Token::minus) {
            const bool neg = cur().kind == Token::minus;
            advance();
            acc += maybe_negate(parse_term(), neg);
        }
        return acc;
    }

    static NCPoly maybe_negate(NCPoly p, bool neg) { return neg ? -p : p; }

    NCPoly parse_term() {
        if (!starts_atom())
            throw syntax_error(cur().pos, "expected a coefficient or generator");
        NCPoly acc = parse_atom();
        for (;;) {
            if (cur().kind == Token::star) {
                advance();
                acc *= parse_atom();
            } else if (starts_atom()) {
                acc *= parse_atom();
            } else {
                break;
            }
        }
        return acc;
    }

    NCPoly parse_atom() {
        const Token& t = cur();
        switch (t.kind) {
            case Token::lparen: {
                advance();
                Laurent inner = parse_laurent_sum();
                expect(Token::rparen, "')'");
                return NCPoly::scalar(alpha_, inner);
            }
            case Token::number:
                return NCPoly::scalar(alpha_, Laurent(parse_number()));
            case Token::ident: {
                if (t.text == "q") {
                    advance();
                    return NCPoly::scalar(alpha_, Laurent::q_power(parse_opt_exponent(true)));
                }
                auto g = gen_from_name(t.text);
                if (!g)
                    throw syntax_error(t.pos, "unknown symbol '" + t.text + "'");
                if (alphabet_of(*g) != alpha_)
                    throw alphabet_mismatch("symbol '" + t.text + "' at position " +
                                            std::to_string(t.pos) + " is not in the " +
                                            std::string(alphabet_name(alpha_)) + " alphabet");
                advance();
                const int e = parse_opt_exponent(false);
                std::vector<Gen> letters(static_cast<std::size_t>(e), *g);
                return NCPoly::from_word(Word(alpha_, std::move(letters)));
            }
            default:
                throw syntax_error(t.pos, "expected a coefficient or generator");
        }
    }

    // exponent after an optional '^'; defaults to 1.  Negative exponents
    // only on q.
    int parse_opt_exponent(bool allow_negative) {
        if (cur().kind != Token::caret) return 1;
        advance();
        bool neg = false;
        if (cur().kind == Token::minus) {
            if (!allow_negative)
                throw syntax_error(cur().pos, "negative exponents are only allowed on q");
            neg = true;
            advance();
        }
        if (cur().kind != Token::number)
            throw syntax_error(cur().pos, "expected an integer exponent");
        const long v = std::stol(cur().text);
        if (!allow_negative && v < 1)
            throw syntax_error(cur().pos, "generator exponents must be positive");
        advance();
        return static_cast<int>(neg ? -v : v);
    }

    Rational parse_number() {
        const Token& t = cur();
        Rational num(t.text);
        advance();
        if (cur().kind == Token::slash) {
            advance();
            if (cur().kind != Token::number)
                throw syntax_error(cur().pos, "expected a denominator");
            Rational den(cur().text);
            if (den == 0) throw syntax_error(cur().pos, "zero denominator");
            advance();
            return num / den;
        }
        return num;
    }

    Laurent parse_laurent_sum() {
        Laurent acc;
        bool negate = false;
        if (cur().kind == Token::minus) {
            negate = true;
            advance();
        }
        acc += negate ? -parse_laurent_term() : parse_laurent_term();
        while (cur().kind == Token::plus || cur().kind == Token::minus) {
            const bool neg = cur().kind == Token::minus;
            advance();
            acc += neg ? -parse_laurent_term() : parse_laurent_term();
        }
        return acc;
    }

    Laurent parse_laurent_term() {
        Laurent acc = parse_laurent_atom();
        for (;;) {
            if (cur().kind == Token::star) {
                advance();
                acc *= parse_laurent_atom();
            } else if (starts_atom()) {
                acc *= parse_laurent_atom();
            } else {
                break;
            }
        }
        return acc;
    }

    Laurent parse_laurent_atom() {
        const Token& t = cur();
        switch (t.kind) {
            case Token::lparen: {
                advance();
                Laurent inner = parse_laurent_sum();
                expect(Token::rparen, "')'");
                return inner;
            }
            case Token::number:
                return Laurent(parse_number());
            case Token::ident:
                if (t.text == "q") {
                    advance();
                    return Laurent::q_power(parse_opt_exponent(true));
                }
                throw syntax_error(t.pos, "only q and rational literals may appear in a coefficient");
            default:
                throw syntax_error(t.pos, "expected a coefficient");
        }
    }
};

} // namespace detail

inline NCPoly parse_expr(std::string_view src, Alphabet alphabet) {
    return detail::Parser(src, alphabet).parse_expr();
}

inline Laurent parse_laurent(std::string_view src) {
    return detail::Parser(src, Alphabet::U).parse_laurent_only();
}

inline Rational parse_rational(std::string_view src) {
    Laurent l = parse_laurent(src);
    if (!l.is_constant())
        throw syntax_error(0, "expected a rational number, got a q expression");
    return l.is_zero() ? Rational(0) : l.coeff(0);
}

} // namespace qeven
