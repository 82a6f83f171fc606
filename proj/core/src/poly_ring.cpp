#include "ffred/poly_ring.hpp"

#include <algorithm>
#include <utility>

namespace ffred {

Poly::Poly(long constant) {
    if (constant != 0) {
        c_.emplace_back(constant);
    }
}

Poly::Poly(Int constant) {
    if (!ffred::is_zero(constant)) {
        c_.push_back(std::move(constant));
    }
}

Poly::Poly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { normalize(); }

Poly::Poly(std::initializer_list<long> coeffs) {
    c_.reserve(coeffs.size());
    for (long v : coeffs) {
        c_.emplace_back(v);
    }
    normalize();
}

void Poly::normalize() {
    while (!c_.empty() && sgn(c_.back()) == 0) {
        c_.pop_back();
    }
}

const Int& Poly::coeff(std::size_t i) const {
    static const Int kZero = 0;
    return i < c_.size() ? c_[i] : kZero;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Int& v : r.c_) {
        v = -v;
    }
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Int> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a.coeff(i) + b.coeff(i);
    }
    return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Int> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a.coeff(i) - b.coeff(i);
    }
    return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (is_zero(a) || is_zero(b)) {
        return Poly();
    }
    std::vector<Int> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Poly(std::move(out));
}

Poly exact_div(const Poly& a, const Poly& b) {
    if (is_zero(b)) {
        throw InexactDivision("exact_div: zero polynomial divisor", format(a));
    }
    if (is_zero(a)) {
        return Poly();
    }
    if (a.degree() < b.degree()) {
        throw InexactDivision(
            "exact_div: divisor degree exceeds dividend degree, remainder " +
                format(a),
            format(a));
    }
    // Schoolbook long division, highest degree first.  For an exact multiple
    // every leading-coefficient division is exact in Z, so any failed
    // integer division already proves inexactness.
    std::vector<Int> rem = a.coeffs();
    const std::vector<Int>& d = b.coeffs();
    const std::size_t qlen = rem.size() - d.size() + 1;
    std::vector<Int> q(qlen);
    for (std::size_t step = qlen; step-- > 0;) {
        const Int& lead = rem[step + d.size() - 1];
        if (sgn(lead) != 0) {
            Int qc, qr;
            mpz_tdiv_qr(qc.get_mpz_t(), qr.get_mpz_t(), lead.get_mpz_t(),
                        d.back().get_mpz_t());
            if (sgn(qr) != 0) {
                throw InexactDivision(
                    "exact_div: leading coefficient " + lead.get_str() +
                        " not divisible by " + d.back().get_str(),
                    qr.get_str());
            }
            q[step] = qc;
            for (std::size_t i = 0; i < d.size(); ++i) {
                rem[step + i] -= qc * d[i];
            }
        }
    }
    Poly remainder{std::vector<Int>(rem)};
    if (!is_zero(remainder)) {
        throw InexactDivision(
            "exact_div: nonzero polynomial remainder " + format(remainder),
            format(remainder));
    }
    return Poly(std::move(q));
}

std::string format(const Poly& a) {
    if (is_zero(a)) {
        return "[0]";
    }
    std::string out = "[";
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (i > 0) {
            out += ',';
        }
        out += a.coeffs()[i].get_str();
    }
    out += ']';
    return out;
}

Poly parse_poly(const std::string& text, std::size_t pos_base) {
    if (text.empty() || text.front() != '[') {
        throw ParseError("polynomial literal must start with '['", pos_base);
    }
    if (text.back() != ']' || text.size() < 3) {
        throw ParseError("polynomial literal must end with ']'",
                         pos_base + (text.empty() ? 0 : text.size() - 1));
    }
    std::vector<Int> coeffs;
    std::size_t start = 1;  // first char after '['
    const std::size_t end = text.size() - 1;
    while (start <= end) {
        std::size_t comma = text.find(',', start);
        std::size_t stop = (comma == std::string::npos || comma > end) ? end : comma;
        coeffs.push_back(
            parse_int(text.substr(start, stop - start), pos_base + start));
        if (stop == end) {
            break;
        }
        start = stop + 1;
        if (start == end) {
            throw ParseError("trailing comma in polynomial literal",
                             pos_base + stop);
        }
    }
    // Canonical form: no trailing zero coefficient unless the literal is
    // exactly "[0]".
    if (coeffs.size() > 1 && sgn(coeffs.back()) == 0) {
        throw ParseError("trailing zero coefficient in polynomial literal",
                         pos_base + end - 1);
    }
    return Poly(std::move(coeffs));
}

}  // namespace ffred
