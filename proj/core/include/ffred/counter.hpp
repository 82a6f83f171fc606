#pragma once

#include <cstdint>

namespace ffred {

/*
 * Operation tally for instrumented runs.  This is the one place where the
 * counting convention lives; everything that counts (matrix kernels, the
 * solver, the reference eliminators, the predictors) follows these rules:
 *
 *  - adds   counts ring additions and subtractions, one per element op.
 *  - muls   counts ring multiplications, one per element op, with no
 *           value-based exemptions: multiplying by a scalar that happens to
 *           equal one still counts.
 *  - divs   counts exact divisions whose divisor is NOT the domain's one.
 *           Divisions by one are performed (they are no-ops by value) but
 *           tallied separately in unit_divs.  The only structural source of
 *           unit divisors is the elimination step at recursion levels whose
 *           preceding corner minor is the empty minor, i.e. the constant one.
 *  - unit_divs  divisions whose divisor equals one (see above).
 *  - mm_muls    the subset of muls performed inside a matrix-matrix product.
 *           Scalar-times-matrix products do not contribute.  Growth-rate
 *           measurements use this tally because it is the quantity the
 *           multiplication backend actually controls.
 *
 * One counts per ring operation regardless of the element's internal cost,
 * so a polynomial product and an integer product both add one to muls.
 *
 * Counters are plain state passed by reference; nothing here is thread safe
 * and nothing is global.  All library operations are side-effect-free except
 * for increments of an explicitly passed OpCounts.
 */
struct OpCounts {
    std::uint64_t adds = 0;
    std::uint64_t muls = 0;
    std::uint64_t divs = 0;
    std::uint64_t unit_divs = 0;
    std::uint64_t mm_muls = 0;

    OpCounts& operator+=(const OpCounts& o) {
        adds += o.adds;
        muls += o.muls;
        divs += o.divs;
        unit_divs += o.unit_divs;
        mm_muls += o.mm_muls;
        return *this;
    }
    friend OpCounts operator+(OpCounts a, const OpCounts& b) { return a += b; }
    friend bool operator==(const OpCounts&, const OpCounts&) = default;

    // muls plus every division performed, including the ones with unit
    // divisor.  The Strassen-mode reference totals are stated in this form.
    std::uint64_t muls_and_all_divs() const { return muls + divs + unit_divs; }
};

}  // namespace ffred
