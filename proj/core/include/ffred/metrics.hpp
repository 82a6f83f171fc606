#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "ffred/counter.hpp"
#include "ffred/matmul.hpp"
#include "ffred/matrix.hpp"
#include "ffred/solver.hpp"

namespace ffred {

/*
 * Closed-form and structural operation-count predictors, plus the sweep
 * harness that compares them against instrumented runs.
 *
 * Two families of predictions exist:
 *
 *  - Closed forms (predict_classical, predict_onepass, predict_strassen_md)
 *    evaluate published polynomial/logarithmic formulas.  They require the
 *    shapes the formulas were derived for (power-of-two n, and m == n+1 for
 *    the specialized ones) and they follow the conventions stated on
 *    OpCounts: divisions by one are excluded from divs, except that the
 *    Strassen muls+divs total deliberately includes them (that is how the
 *    reference total is defined; compare it against muls_and_all_divs()).
 *
 *  - predict_tree walks the recursion of reduce() symbolically with the
 *    actual strategy and backend cost model and therefore matches the
 *    instrumented tally of solve() exactly, operation class by operation
 *    class, for every shape and strategy.  The one caveat: predict_tree
 *    decides "divisor is one" structurally (only the top-level eliminations
 *    divide by the empty corner minor), while the live counter decides by
 *    value.  On inputs where some genuine corner minor happens to equal
 *    one, the live divs/unit_divs split differs; random_int_system filters
 *    such matrices out for calibration runs.
 */

struct PredictedCounts {
    std::uint64_t adds = 0;
    std::uint64_t muls = 0;
    std::uint64_t divs = 0;
};

// Closed forms for the dichotomous strategy with the classical backend.
// n must be a power of two, m >= n+1.
PredictedCounts predict_classical(std::size_t n, std::size_t m);

// Closed forms for the single-sweep reference eliminator on an n x (n+1)
// system (any n >= 1).
PredictedCounts predict_onepass(std::size_t n);

// Reference total of multiplications plus all divisions (unit divisors
// included) for the dichotomous strategy with the Strassen backend at
// cutoff 1 on an n x (n+1) system.  n must be a power of two >= 2.
std::uint64_t predict_strassen_md(std::size_t n);

// Cost of one l x n by n x c product under the given backend, mirroring the
// counting of mat_mul exactly.  muls here lands in both the muls and
// mm_muls tallies of an instrumented run.
struct MatMulCost {
    std::uint64_t muls = 0;
    std::uint64_t adds = 0;
};
MatMulCost matmul_cost(std::size_t l, std::size_t n, std::size_t c,
                       const MulBackend& backend);

// Structural walk of the reduction tree; see the header comment.
OpCounts predict_tree(std::size_t n, std::size_t m,
                      const PartitionStrategy& strategy,
                      const MulBackend& backend);

// Uniform random extended system with entries in [-9, 9] whose corner
// minors of orders 1..n are all nonzero, and (by default) not equal to one
// for orders below n so that value-based and structural division counting
// agree.  Retries draws until the filter passes.
Matrix<Int> random_int_system(std::size_t n, std::size_t m,
                              std::mt19937_64& rng,
                              bool avoid_unit_minors = true);

struct SweepRow {
    std::size_t n = 0;
    std::size_t m = 0;
    std::string strategy;
    std::string backend;
    OpCounts counts;
    OpCounts predicted;
    std::uint64_t wall_ns = 0;
};

// Instrumented solves of random n x (n+1) systems for each requested size,
// with structural predictions and wall-clock time.  Deterministic for a
// fixed seed.
std::vector<SweepRow> sweep(const std::vector<std::size_t>& sizes,
                            const PartitionStrategy& strategy,
                            const MulBackend& backend,
                            std::uint64_t seed = 20260814);

// CSV with the fixed column set; header always present, one row per entry.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// log2(count(2n) / count(n)) between consecutive rows whose sizes double,
// for the matrix-product multiplication tally.  Empty when no consecutive
// doubling pair exists.
struct GrowthPoint {
    std::size_t from_n = 0;
    std::size_t to_n = 0;
    double mm_mul_exponent = 0.0;
    double mul_exponent = 0.0;
    double add_exponent = 0.0;
};
std::vector<GrowthPoint> growth_exponents(const std::vector<SweepRow>& rows);

}  // namespace ffred
