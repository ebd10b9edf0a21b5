#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qeven/errors.hpp"

namespace qeven {

// Two generator alphabets share one term algebra:
//   U: the equitable generators x, y, z;
//   A: the even-subalgebra letters nu_x, nu_y, nu_z, x^2, y^2, z^2.
// Every word carries its alphabet; mixing is rejected.
enum class Alphabet : std::uint8_t { U, A };

enum class Gen : std::uint8_t { X, Y, Z, NX, NY, NZ, X2, Y2, Z2 };

inline constexpr Alphabet alphabet_of(Gen g) noexcept {
    return g <= Gen::Z ? Alphabet::U : Alphabet::A;
}

inline constexpr std::string_view gen_name(Gen g) noexcept {
    constexpr std::array<std::string_view, 9> names{"x", "y", "z", "nx", "ny", "nz", "x2", "y2", "z2"};
    return names[static_cast<std::size_t>(g)];
}

inline constexpr std::array<Gen, 3> u_generators() noexcept { return {Gen::X, Gen::Y, Gen::Z}; }

inline constexpr std::array<Gen, 6> a_generators() noexcept {
    return {Gen::NX, Gen::NY, Gen::NZ, Gen::X2, Gen::Y2, Gen::Z2};
}

inline std::string_view alphabet_name(Alphabet a) noexcept { return a == Alphabet::U ? "U" : "A"; }

inline void require_same_alphabet(Alphabet a, Alphabet b) {
    if (a != b)
        throw alphabet_mismatch(std::string("alphabet mismatch: ") + std::string(alphabet_name(a)) +
                                " vs " + std::string(alphabet_name(b)));
}

/*
 * A word over one alphabet.  The empty word is the multiplicative
 * identity.  Ordering is by length, then lexicographic in the generator
 * order x < y < z (resp. nx < ny < nz < x2 < y2 < z2); this is the
 * canonical printing order and, on the U alphabet, the PBW order.
 */
class Word {
public:
    explicit Word(Alphabet a) : alpha_(a) {}

    Word(Alphabet a, std::vector<Gen> letters) : alpha_(a), letters_(std::move(letters)) {
        for (Gen g : letters_) require_same_alphabet(alpha_, alphabet_of(g));
    }

    Word(std::initializer_list<Gen> letters) : Word(letters.begin(), letters.end()) {}

    template <typename It>
    Word(It first, It last) : alpha_(first == last ? Alphabet::U : alphabet_of(*first)),
                              letters_(first, last) {
        for (Gen g : letters_) require_same_alphabet(alpha_, alphabet_of(g));
    }

    static Word empty(Alphabet a) { return Word(a); }

    Alphabet alphabet() const noexcept { return alpha_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool is_empty() const noexcept { return letters_.empty(); }
    Gen operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Gen>& letters() const noexcept { return letters_; }

    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    Word operator*(const Word& o) const {
        require_same_alphabet(alpha_, o.alpha_);
        Word out(alpha_);
        out.letters_.reserve(size() + o.size());
        out.letters_.insert(out.letters_.end(), letters_.begin(), letters_.end());
        out.letters_.insert(out.letters_.end(), o.letters_.begin(), o.letters_.end());
        return out;
    }

    Word appended(Gen g) const {
        require_same_alphabet(alpha_, alphabet_of(g));
        Word out = *this;
        out.letters_.push_back(g);
        return out;
    }

    // subword [from, to)
    Word slice(std::size_t from, std::size_t to) const {
        Word out(alpha_);
        out.letters_.assign(letters_.begin() + from, letters_.begin() + to);
        return out;
    }

    // *this with [i, i+2) replaced by the letters of mid
    Word splice2(std::size_t i, const Word& mid) const {
        Word out(alpha_);
        out.letters_.reserve(size() - 2 + mid.size());
        out.letters_.insert(out.letters_.end(), letters_.begin(), letters_.begin() + i);
        out.letters_.insert(out.letters_.end(), mid.letters_.begin(), mid.letters_.end());
        out.letters_.insert(out.letters_.end(), letters_.begin() + i + 2, letters_.end());
        return out;
    }

    bool operator==(const Word& o) const noexcept {
        return alpha_ == o.alpha_ && letters_ == o.letters_;
    }

    std::strong_ordering operator<=>(const Word& o) const noexcept {
        if (auto c = alpha_ <=> o.alpha_; c != 0) return c;
        if (auto c = letters_.size() <=> o.letters_.size(); c != 0) return c;
        for (std::size_t i = 0; i < letters_.size(); ++i)
            if (auto c = letters_[i] <=> o.letters_[i]; c != 0) return c;
        return std::strong_ordering::equal;
    }

    // Run-length text form: "x^2*y", "nx^2*z2"; the empty word prints "1".
    std::string str() const {
        if (letters_.empty()) return "1";
        std::string out;
        for (std::size_t i = 0; i < letters_.size();) {
            std::size_t j = i;
            while (j < letters_.size() && letters_[j] == letters_[i]) ++j;
            if (!out.empty()) out += "*";
            out += gen_name(letters_[i]);
            if (j - i > 1) out += "^" + std::to_string(j - i);
            i = j;
        }
        return out;
    }

private:
    Alphabet alpha_;
    std::vector<Gen> letters_;
};

} // namespace qeven
