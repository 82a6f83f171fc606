#pragma once

#include <concepts>
#include <string>

#include "ffred/counter.hpp"
#include "ffred/int_ring.hpp"
#include "ffred/poly_ring.hpp"

namespace ffred {

// A commutative integral domain with decidable exact division.  Both Int and
// Poly model this.  T(1) must be the multiplicative identity and T{} the
// additive one.
template <class T>
concept IntegralDomain = requires(const T& a, const T& b) {
    { T() } -> std::same_as<T>;
    { T(1) } -> std::same_as<T>;
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a* b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { exact_div(a, b) } -> std::convertible_to<T>;
    { is_zero(a) } -> std::same_as<bool>;
    { is_one(a) } -> std::same_as<bool>;
    { a == b } -> std::same_as<bool>;
};

// Counted element operations.  See OpCounts for the tally rules; these four
// helpers are the only place where arithmetic and counting meet.
template <IntegralDomain T>
T cadd(const T& a, const T& b, OpCounts& ctx) {
    ++ctx.adds;
    return T(a + b);
}

template <IntegralDomain T>
T csub(const T& a, const T& b, OpCounts& ctx) {
    ++ctx.adds;
    return T(a - b);
}

template <IntegralDomain T>
T cmul(const T& a, const T& b, OpCounts& ctx) {
    ++ctx.muls;
    return T(a * b);
}

template <IntegralDomain T>
T cdiv(const T& a, const T& b, OpCounts& ctx) {
    if (is_one(b)) {
        ++ctx.unit_divs;
    } else {
        ++ctx.divs;
    }
    return exact_div(a, b);
}

}  // namespace ffred
