#pragma once

#include <string>
#include <utility>

#include "qeven/laurent.hpp"

namespace qeven {

/*
 * Fraction field of the Laurent ring, used only where linear algebra needs
 * division (kernels, Hom spaces, symbolic spans).  Identity checking stays
 * in the ring via div_exact.
 *
 * Canonical form: the denominator is a monic polynomial in q with nonzero
 * constant term and no common polynomial factor with the numerator; all
 * q-power units live in the numerator.  Equality is then structural.
 */
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(int c) : num_(c), den_(1) {}
    RatFunc(Laurent n) : num_(std::move(n)), den_(1) {}
    RatFunc(Laurent n, Laurent d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const Laurent& num() const noexcept { return num_; }
    const Laurent& den() const noexcept { return den_; }

    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_laurent() const noexcept { return den_.is_one(); }

    // Precondition: is_laurent(); used to read results that are known to
    // live in the ring.
    const Laurent& as_laurent() const {
        assert(is_laurent());
        return num_;
    }

    RatFunc operator-() const {
        RatFunc r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw division_by_zero();
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }

    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    bool operator==(const RatFunc&) const = default;

    std::string str() const {
        if (is_laurent()) return num_.str();
        return "(" + num_.str() + ") / (" + den_.str() + ")";
    }

private:
    Laurent num_, den_;

    void normalize() {
        if (den_.is_zero()) throw division_by_zero();
        if (num_.is_zero()) {
            den_ = Laurent(1);
            return;
        }
        Laurent g = poly_gcd(num_, den_);
        if (!g.is_one()) {
            num_ = div_exact(num_, g);
            den_ = div_exact(den_, g);
        }
        // move the denominator's unit part (c * q^k) into the numerator
        const int shift = den_.min_exp();
        const Rational lead = den_.terms().rbegin()->second;
        den_ = div_exact(den_, Laurent::monomial(lead, shift));
        num_ = div_exact(num_, Laurent::monomial(lead, shift));
    }
};

} // namespace qeven
