#pragma once

#include <cstddef>
#include <string>

#include <gmpxx.h>

#include "ffred/errors.hpp"

namespace ffred {

// Arbitrary-precision signed integers.  GMP's mpz_class already has value
// semantics and exact operators, so the domain is the type itself plus the
// free functions below.
using Int = mpz_class;

inline bool is_zero(const Int& a) { return sgn(a) == 0; }
inline bool is_one(const Int& a) { return a == 1; }

// Exact quotient a / b.  Throws InexactDivision if b is zero or does not
// divide a; the remainder travels in the exception for diagnostics.
inline Int exact_div(const Int& a, const Int& b) {
    if (sgn(b) == 0) {
        throw InexactDivision("exact_div: zero divisor", a.get_str());
    }
    Int q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (sgn(r) != 0) {
        throw InexactDivision(
            "exact_div: nonzero remainder " + r.get_str() + " in " +
                a.get_str() + " / " + b.get_str(),
            r.get_str());
    }
    return q;
}

inline std::string format(const Int& a) { return a.get_str(); }

// Grammar: optional '-' or '+' sign followed by decimal digits, nothing else.
// pos_base offsets reported positions when the text is a slice of a larger
// input.
inline Int parse_int(const std::string& text, std::size_t pos_base = 0) {
    if (text.empty()) {
        throw ParseError("empty integer literal", pos_base);
    }
    std::size_t i = 0;
    if (text[i] == '-' || text[i] == '+') {
        ++i;
    }
    if (i == text.size()) {
        throw ParseError("sign without digits in integer literal", pos_base + i);
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (text[j] < '0' || text[j] > '9') {
            throw ParseError(std::string("unexpected character '") + text[j] +
                                 "' in integer literal",
                             pos_base + j);
        }
    }
    // mpz_set_str accepts '-' but not a leading '+'
    return Int(text.front() == '+' ? text.substr(1) : text, 10);
}

}  // namespace ffred
