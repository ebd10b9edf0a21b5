#pragma once

#include <stdexcept>
#include <string>

namespace qeven {

// Base class for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

// Raised when an exact Laurent quotient does not exist.  In identity
// checking this doubles as a detector for misapplied identities: every
// division the algebra calls for is exact.
struct not_divisible : error {
    not_divisible() : error("no exact quotient in the Laurent ring") {}
};

struct alphabet_mismatch : error {
    explicit alphabet_mismatch(const std::string& what) : error(what) {}
};

struct syntax_error : error {
    std::size_t position;
    syntax_error(std::size_t pos, const std::string& what)
        : error("syntax error at " + std::to_string(pos) + ": " + what), position(pos) {}
};

struct bad_q_value : error {
    explicit bad_q_value(const std::string& what) : error(what) {}
};

// Rewriting exceeded its safety cap.  Signals a corrupted rule table; the
// shipped rules always terminate.
struct non_termination : error {
    non_termination() : error("rewriting exceeded the step cap") {}
};

struct kernel_too_large : error {
    explicit kernel_too_large(std::size_t dim)
        : error("nu_y kernel has dimension " + std::to_string(dim) +
                "; expected 1 (input not irreducible or not generic)") {}
};

struct not_eigen : error {
    not_eigen() : error("kernel vector is not a z^2 eigenvector; input does not satisfy the module relations") {}
};

struct not_applicable : error {
    explicit not_applicable(const std::string& what) : error(what) {}
};

} // namespace qeven
