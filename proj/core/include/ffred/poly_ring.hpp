#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "ffred/errors.hpp"
#include "ffred/int_ring.hpp"

namespace ffred {

// Dense univariate polynomials over the integers.  Coefficients are stored
// in ascending degree order with no trailing zeros; the zero polynomial is
// the empty coefficient sequence.  Z[t] is an integral domain, so degrees
// add under multiplication and exact division is well defined.
class Poly {
public:
    Poly() = default;
    explicit Poly(long constant);
    explicit Poly(Int constant);
    explicit Poly(std::vector<Int> coeffs);
    Poly(std::initializer_list<long> coeffs);

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }

    // Zero for indices beyond the stored degree.
    const Int& coeff(std::size_t i) const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) = default;

private:
    void normalize();
    std::vector<Int> c_;
};

inline bool is_zero(const Poly& a) { return a.degree() < 0; }
inline bool is_one(const Poly& a) {
    return a.degree() == 0 && is_one(a.coeffs()[0]);
}

// Exact quotient in Z[t]; throws InexactDivision when b is zero, when a
// leading coefficient fails to divide, or when a nonzero remainder is left.
Poly exact_div(const Poly& a, const Poly& b);

// "[c0,c1,...,ck]" with ascending integer coefficients, no trailing zero
// except the zero polynomial "[0]".  No whitespace anywhere inside.
std::string format(const Poly& a);
Poly parse_poly(const std::string& text, std::size_t pos_base = 0);

}  // namespace ffred
