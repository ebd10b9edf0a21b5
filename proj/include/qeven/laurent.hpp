#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include "qeven/errors.hpp"

namespace qeven {

// Exact rational scalar.  All arithmetic in the library is exact; there is
// no floating-point mode.
using Rational = boost::multiprecision::cpp_rational;

inline Rational rational_pow(const Rational& base, long k) {
    if (k == 0) return Rational(1);
    Rational b = base;
    if (k < 0) {
        if (b == 0) throw division_by_zero();
        b = Rational(denominator(base), numerator(base));
        k = -k;
    }
    Rational acc(1);
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

inline std::string rational_str(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

/*
 * Laurent polynomial in q with rational coefficients: the scalar ring of
 * the whole library.  Stored sparsely as exponent -> coefficient with no
 * zero coefficients, so equal values compare structurally equal and
 * printing (ascending exponent) is deterministic.  Values are immutable in
 * spirit: every operation returns a fresh canonical value, and const
 * objects are safe to share across threads.
 */
class Laurent {
public:
    Laurent() = default;
    Laurent(int c) : Laurent(Rational(c)) {}
    Laurent(Rational c) {
        if (c != 0) terms_.emplace(0, std::move(c));
    }

    static Laurent q_power(int k) { return monomial(Rational(1), k); }

    static Laurent monomial(Rational c, int k) {
        Laurent p;
        if (c != 0) p.terms_.emplace(k, std::move(c));
        return p;
    }

    bool is_zero() const noexcept { return terms_.empty(); }

    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }

    // True when the value is c*q^k for a single term (including constants).
    bool is_monomial() const noexcept { return terms_.size() == 1; }

    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
    }

    int min_exp() const {
        assert(!is_zero());
        return terms_.begin()->first;
    }

    int max_exp() const {
        assert(!is_zero());
        return terms_.rbegin()->first;
    }

    Rational coeff(int k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const std::map<int, Rational>& terms() const noexcept { return terms_; }

    Laurent& operator+=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }

    Laurent& operator-=(const Laurent& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }

    Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

    friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
    friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

    friend Laurent operator*(const Laurent& a, const Laurent& b) {
        Laurent out;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
        return out;
    }

    Laurent operator-() const {
        Laurent out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
        return out;
    }

    bool operator==(const Laurent&) const = default;

    // Shift by q^k (multiplication by a unit).
    Laurent shifted(int k) const {
        Laurent out;
        for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
        return out;
    }

    // Exact substitution q := at.  The caller guarantees at != 0.
    Rational eval(const Rational& at) const {
        Rational acc(0);
        for (const auto& [e, c] : terms_) acc += c * rational_pow(at, e);
        return acc;
    }

    // Deterministic text form, ascending exponent: "1/2*q^-3 - 1 + q^2".
    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            Rational mag = c;
            if (first) {
                if (c < 0) {
                    out += "-";
                    mag = -c;
                }
                first = false;
            } else {
                out += (c < 0) ? " - " : " + ";
                if (c < 0) mag = -c;
            }
            if (e == 0) {
                out += rational_str(mag);
            } else {
                if (mag != 1) out += rational_str(mag) + "*";
                out += (e == 1) ? "q" : "q^" + std::to_string(e);
            }
        }
        return out;
    }

private:
    std::map<int, Rational> terms_;

    void add_term(int e, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
};

inline Laurent pow(const Laurent& base, unsigned n) {
    Laurent acc(1), b = base;
    while (n > 0) {
        if (n & 1) acc *= b;
        b *= b;
        n >>= 1;
    }
    return acc;
}

// Exact quotient a / b in the Laurent ring, or nullopt when none exists.
// Long division from the top; valuations add, so the quotient exponent of
// each step may never sink below min_exp(a) - min_exp(b).
inline std::optional<Laurent> try_div_exact(const Laurent& a, const Laurent& b) {
    if (b.is_zero()) throw division_by_zero();
    if (a.is_zero()) return Laurent();
    const int floor_exp = a.min_exp() - b.min_exp();
    const int b_max = b.max_exp();
    const Rational& b_lead = b.terms().rbegin()->second;
    Laurent rem = a, quot;
    while (!rem.is_zero()) {
        const int e = rem.max_exp() - b_max;
        if (e < floor_exp) return std::nullopt;
        Laurent m = Laurent::monomial(rem.terms().rbegin()->second / b_lead, e);
        quot += m;
        rem -= m * b;
    }
    return quot;
}

inline Laurent div_exact(const Laurent& a, const Laurent& b) {
    auto q = try_div_exact(a, b);
    if (!q) throw not_divisible();
    return *q;
}

/*
 * Evaluation point for q.  The standing assumptions are q != 0 and
 * q^2 != 1; a rational outside {0, 1, -1} is never a root of unity, so a
 * valid QValue automatically satisfies the stronger "not a root of unity"
 * hypothesis the module theory needs.
 */
class QValue {
public:
    explicit QValue(Rational v) : v_(std::move(v)) {
        if (v_ == 0 || v_ == 1 || v_ == -1)
            throw bad_q_value("q must avoid {0, 1, -1}; got " + rational_str(v_));
    }

    const Rational& value() const noexcept { return v_; }

    bool operator==(const QValue&) const = default;

private:
    Rational v_;
};

// Monic gcd in Q[q] of the polynomial parts, exposed for the rational
// function field.  The result has min_exp 0 and leading coefficient 1;
// gcd(0, 0) = 0.
inline Laurent poly_gcd(const Laurent& a, const Laurent& b) {
    auto as_poly = [](const Laurent& p) { return p.is_zero() ? p : p.shifted(-p.min_exp()); };
    auto make_monic = [](const Laurent& p) {
        if (p.is_zero()) return p;
        Laurent lead = Laurent::monomial(p.terms().rbegin()->second, 0);
        return div_exact(p, lead);
    };
    Laurent r0 = as_poly(a), r1 = as_poly(b);
    while (!r1.is_zero()) {
        // remainder of r0 by r1 in Q[q]
        Laurent rem = r0;
        const int d1 = r1.max_exp();
        const Rational& lead = r1.terms().rbegin()->second;
        while (!rem.is_zero() && rem.max_exp() >= d1) {
            Laurent m = Laurent::monomial(rem.terms().rbegin()->second / lead, rem.max_exp() - d1);
            rem -= m * r1;
        }
        r0 = std::move(r1);
        r1 = rem.is_zero() ? rem : rem.shifted(-rem.min_exp());
    }
    return make_monic(r0);
}

} // namespace qeven
