// Acceptance gate: eight checks, one PASS/FAIL line each, exit code is the
// number of failures.  Tolerances are zero on every count and value check;
// each check also carries a wall-clock budget, enforced.
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ffred/int_ring.hpp"
#include "ffred/matmul.hpp"
#include "ffred/matrix.hpp"
#include "ffred/metrics.hpp"
#include "ffred/oracle.hpp"
#include "ffred/poly_ring.hpp"
#include "ffred/solver.hpp"

using namespace ffred;

namespace {

std::vector<std::string> g_problems;

#define EXPECT(cond, msg)                                                 \
    do {                                                                  \
        if (!(cond)) {                                                    \
            g_problems.push_back(std::string(msg) + " (line " +           \
                                 std::to_string(__LINE__) + ")");         \
        }                                                                 \
    } while (0)

Matrix<Int> reference_system() {
    return Matrix<Int>{{3, 1, 1, -1, 4},
                       {1, 2, 0, 1, 4},
                       {0, 1, 2, 0, -2},
                       {1, 0, 0, 2, -1}};
}

std::vector<PartitionStrategy> all_strategies() {
    return {PartitionStrategy::dichotomous(), PartitionStrategy::one_pass(),
            PartitionStrategy::forward_backup(), PartitionStrategy::fixed(2)};
}

std::vector<MulBackend> all_backends() {
    return {MulBackend::classical(), MulBackend::strassen(8),
            MulBackend::strassen(1)};
}

// order -> corner minor, collected from both ends of every traced call
std::map<std::size_t, Int> delta_by_order(const ReduceTrace<Int>& trace) {
    std::map<std::size_t, Int> map;
    auto put = [&](std::size_t order, const Int& value) {
        auto [it, inserted] = map.emplace(order, value);
        EXPECT(inserted ? true : it->second == value,
               "trace reports two different minors of order " +
                   std::to_string(order));
    };
    for (const auto& call : trace.calls) {
        put(call.s, call.delta_s);
        put(call.l, call.delta_l);
    }
    return map;
}

Matrix<Int> random_raw(std::size_t rows, std::size_t cols,
                       std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-9, 9);
    Matrix<Int> a(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            a(i, j) = Int(entry(rng));
        }
    }
    return a;
}

// Solve with preconditioning only when the plain run hits a vanishing corner
// minor; returns false when the system is structurally singular (caller
// redraws).  On success `work` holds the row order the solution describes.
bool solve_preconditioned(const Matrix<Int>& a, ParametricSolution<Int>& sol,
                          Matrix<Int>& work, ReduceTrace<Int>* trace) {
    OpCounts ops;
    try {
        if (trace) {
            trace->calls.clear();
        }
        sol = solve(a, PartitionStrategy::dichotomous(),
                    MulBackend::classical(), ops, false, trace);
        work = a;
        return true;
    } catch (const SingularMinor&) {
    }
    try {
        if (trace) {
            trace->calls.clear();
        }
        sol = solve(a, PartitionStrategy::dichotomous(),
                    MulBackend::classical(), ops, true, trace);
        work = apply_row_permutation(a, sol.permutation);
        return true;
    } catch (const StructurallySingular&) {
        return false;
    } catch (const SingularMinor&) {
        EXPECT(false, "preconditioned run still hit a vanishing corner minor");
        return false;
    }
}

bool check_1_reference_system() {
    const Matrix<Int> a = reference_system();
    const Matrix<Int> expected_minors{{27}, {54}, {-54}, {-27}};
    const Matrix<Int> expected_block{{11, -4, -18}, {-2, 13, -9}};
    const std::map<std::size_t, Int> expected_deltas{
        {1, 3}, {2, 5}, {3, 11}, {4, 27}};
    int block_seen = 0;
    for (const auto& strategy : all_strategies()) {
        for (const auto& backend : all_backends()) {
            OpCounts ops;
            ReduceTrace<Int> trace;
            const auto sol = solve(a, strategy, backend, ops, false, &trace);
            EXPECT(sol.delta_n == 27, "denominator != 27 under " +
                                          strategy.name());
            EXPECT(sol.minors == expected_minors,
                   "numerators wrong under " + strategy.name());
            EXPECT(delta_by_order(trace) == expected_deltas,
                   "intermediate corner minors wrong under " + strategy.name());
            for (const auto& call : trace.calls) {
                if (call.k == 0 && call.s == 2 && call.l == 4) {
                    ++block_seen;
                    EXPECT(call.eliminated == expected_block,
                           "eliminated 2x3 block wrong under " +
                               strategy.name());
                }
            }
        }
    }
    EXPECT(block_seen >= 3, "no strategy split the system at order 2");
    return g_problems.empty();
}

bool check_2_classical_counts() {
    struct Row {
        std::size_t n;
        std::uint64_t adds, muls, divs;
    };
    const Row table[] = {{2, 3, 6, 1},
                         {4, 26, 44, 8},
                         {8, 196, 288, 50},
                         {16, 1480, 1936, 286},
                         {32, 11408, 13632, 1542}};
    std::mt19937_64 rng(2026);
    for (const Row& row : table) {
        const Matrix<Int> a = random_int_system(row.n, row.n + 1, rng);
        OpCounts ops;
        solve(a, PartitionStrategy::dichotomous(), MulBackend::classical(),
              ops);
        const std::string tag = " at n=" + std::to_string(row.n);
        EXPECT(ops.adds == row.adds, "adds off" + tag);
        EXPECT(ops.muls == row.muls, "muls off" + tag);
        EXPECT(ops.divs == row.divs, "divs off" + tag);
    }
    return g_problems.empty();
}

bool check_3_one_pass_counts() {
    struct Row {
        std::size_t n;
        std::uint64_t adds, muls, divs;
    };
    const Row table[] = {{2, 3, 6, 0},
                         {4, 26, 45, 7},
                         {8, 196, 315, 77},
                         {16, 1480, 2295, 665},
                         {32, 11408, 17391, 5425}};
    std::mt19937_64 rng(2027);
    for (const Row& row : table) {
        const Matrix<Int> a = random_int_system(row.n, row.n + 1, rng);
        const std::string tag = " at n=" + std::to_string(row.n);

        OpCounts sweep_ops;
        bareiss_one_pass(a, sweep_ops);
        EXPECT(sweep_ops.adds == row.adds, "single-sweep adds off" + tag);
        EXPECT(sweep_ops.muls == row.muls, "single-sweep muls off" + tag);
        EXPECT(sweep_ops.divs == row.divs, "single-sweep divs off" + tag);

        if (row.n >= 8) {
            OpCounts solver_ops;
            solve(a, PartitionStrategy::dichotomous(), MulBackend::classical(),
                  solver_ops);
            EXPECT(solver_ops.muls + solver_ops.divs <
                       sweep_ops.muls + sweep_ops.divs,
                   "solver not cheaper than the single sweep" + tag);
        }
    }
    return g_problems.empty();
}

bool check_4_strassen_counts() {
    // calibrated convention: multiplications plus every division performed,
    // including the exact divisions by a divisor equal to one
    struct Row {
        std::size_t n;
        std::uint64_t md;
    };
    const Row table[] = {{2, 9}, {4, 61}, {8, 359}};
    std::mt19937_64 rng(2028);
    for (const Row& row : table) {
        const Matrix<Int> a = random_int_system(row.n, row.n + 1, rng);
        OpCounts ops;
        solve(a, PartitionStrategy::dichotomous(), MulBackend::strassen(1),
              ops);
        EXPECT(ops.muls_and_all_divs() == row.md,
               "strassen muls+divs off at n=" + std::to_string(row.n));
    }
    return g_problems.empty();
}

bool check_5_oracle_sweep() {
    std::mt19937_64 rng(2029);
    std::uniform_int_distribution<std::size_t> pick_n(1, 8);
    int solved = 0, preconditioned = 0, mismatches = 0, attempts = 0;
    while (solved < 500 && attempts < 20000) {
        ++attempts;
        const std::size_t n = pick_n(rng);
        const Matrix<Int> a = random_raw(n, n + 1, rng);
        ParametricSolution<Int> sol;
        Matrix<Int> work;
        ReduceTrace<Int> trace;
        if (!solve_preconditioned(a, sol, work, &trace)) {
            continue;  // structurally singular: no reduction to compare
        }
        ++solved;
        if (work != a) {
            ++preconditioned;
        }

        OpCounts scratch;
        const OracleResult<Int> oracle = bareiss_one_pass(work, scratch);
        const std::map<std::size_t, Int> deltas = delta_by_order(trace);
        bool ok = oracle.delta_seq.size() == n &&
                  deltas.size() == n &&
                  sol.delta_n == oracle.delta_seq.back() &&
                  sol.minors == oracle.g;
        for (std::size_t j = 0; ok && j < n; ++j) {
            ok = deltas.at(j + 1) == oracle.delta_seq[j];
        }
        if (ok && n <= 5) {
            for (std::size_t k = 1; ok && k <= n; ++k) {
                ok = laplace_det(block(work, 0, k, 0, k)) ==
                     oracle.delta_seq[k - 1];
            }
            for (std::size_t i = 0; ok && i < n; ++i) {
                ok = substituted_minor(work, n, i, n) == sol.minors(i, 0);
            }
        }
        if (!ok) {
            ++mismatches;
        }
    }
    EXPECT(solved == 500, "could not draw 500 solvable systems");
    EXPECT(preconditioned > 0, "the sweep never exercised preconditioning");
    EXPECT(mismatches == 0,
           std::to_string(mismatches) + " of 500 systems disagreed");
    return g_problems.empty();
}

bool check_6_residuals() {
    std::mt19937_64 rng(2030);
    std::uniform_int_distribution<std::size_t> pick_n(1, 6);
    std::uniform_int_distribution<int> free_value(-5, 5);

    // square systems: A * numerators == delta * b exactly
    int square = 0, violations = 0, attempts = 0;
    while (square < 100 && attempts < 20000) {
        ++attempts;
        const std::size_t n = pick_n(rng);
        const Matrix<Int> a = random_raw(n, n + 1, rng);
        ParametricSolution<Int> sol;
        Matrix<Int> work;
        if (!solve_preconditioned(a, sol, work, nullptr)) {
            continue;
        }
        ++square;
        OpCounts scratch;
        const Matrix<Int> lhs = mat_mul(block(work, 0, n, 0, n), sol.minors,
                                        MulBackend::classical(), scratch);
        for (std::size_t i = 0; i < n; ++i) {
            if (lhs(i, 0) != Int(sol.delta_n * work(i, n))) {
                ++violations;
            }
        }
    }
    EXPECT(square == 100, "could not draw 100 solvable square systems");
    EXPECT(violations == 0,
           std::to_string(violations) + " square residual entries violated");

    // underdetermined systems: substitute random free values, check every
    // equation in exact rational arithmetic
    int solved = 0;
    attempts = 0;
    violations = 0;
    std::uniform_int_distribution<std::size_t> extra(1, 3);
    while (solved < 50 && attempts < 20000) {
        ++attempts;
        const std::size_t n = 1 + rng() % 5;
        const std::size_t m = n + 1 + extra(rng);
        const Matrix<Int> a = random_raw(n, m, rng);
        ParametricSolution<Int> sol;
        Matrix<Int> work;
        if (!solve_preconditioned(a, sol, work, nullptr)) {
            continue;
        }
        ++solved;
        std::vector<Int> free_vals(m - 1 - n);
        for (Int& v : free_vals) {
            v = Int(free_value(rng));
        }
        std::vector<mpq_class> x(n);
        for (std::size_t i = 0; i < n; ++i) {
            Int num = sol.minors(i, m - n - 1);
            for (std::size_t p = n; p + 1 < m; ++p) {
                num -= sol.minors(i, p - n) * free_vals[p - n];
            }
            x[i] = mpq_class(num, sol.delta_n);
            x[i].canonicalize();
        }
        for (std::size_t r = 0; r < n; ++r) {
            mpq_class lhs = 0;
            for (std::size_t j = 0; j < n; ++j) {
                lhs += mpq_class(work(r, j)) * x[j];
            }
            for (std::size_t p = n; p + 1 < m; ++p) {
                lhs += mpq_class(work(r, p) * free_vals[p - n]);
            }
            if (lhs != mpq_class(work(r, m - 1))) {
                ++violations;
            }
        }
    }
    EXPECT(solved == 50, "could not draw 50 underdetermined systems");
    EXPECT(violations == 0,
           std::to_string(violations) + " parametric residuals violated");
    return g_problems.empty();
}

bool check_7_adjugate() {
    std::mt19937_64 rng(2031);
    std::uniform_int_distribution<std::size_t> pick_n(1, 6);
    std::uniform_int_distribution<int> coeff(-3, 3);

    int done = 0, violations = 0, attempts = 0;
    while (done < 100 && attempts < 20000) {
        ++attempts;
        const std::size_t n = pick_n(rng);
        const Matrix<Int> a = random_raw(n, n, rng);
        OpCounts ops;
        Matrix<Int> adj;
        Int det;
        try {
            adj = adjugate(a, PartitionStrategy::dichotomous(),
                           MulBackend::classical(), ops, true);
            det = determinant(a, PartitionStrategy::dichotomous(),
                              MulBackend::classical(), ops, true);
        } catch (const StructurallySingular&) {
            continue;
        }
        if (is_zero(det)) {
            continue;  // nonsingular inputs only
        }
        ++done;
        OpCounts scratch;
        const Matrix<Int> prod = mat_mul(a, adj, MulBackend::classical(),
                                         scratch);
        const Matrix<Int> want = mat_scale(det, Matrix<Int>::identity(n),
                                           scratch);
        if (prod != want) {
            ++violations;
        }
    }
    EXPECT(done == 100, "could not draw 100 nonsingular integer matrices");
    EXPECT(violations == 0,
           std::to_string(violations) + " integer adjugate checks violated");

    done = 0;
    violations = 0;
    attempts = 0;
    while (done < 100 && attempts < 20000) {
        ++attempts;
        const std::size_t n = pick_n(rng);
        Matrix<Poly> a(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                std::vector<Int> c = {Int(coeff(rng)), Int(coeff(rng)),
                                      Int(coeff(rng))};
                a(i, j) = Poly(std::move(c));
            }
        }
        OpCounts ops;
        Matrix<Poly> adj;
        Poly det;
        try {
            adj = adjugate(a, PartitionStrategy::dichotomous(),
                           MulBackend::classical(), ops, true);
            det = determinant(a, PartitionStrategy::dichotomous(),
                              MulBackend::classical(), ops, true);
        } catch (const StructurallySingular&) {
            continue;
        }
        if (is_zero(det)) {
            continue;
        }
        ++done;
        OpCounts scratch;
        const Matrix<Poly> prod = mat_mul(a, adj, MulBackend::classical(),
                                          scratch);
        const Matrix<Poly> want = mat_scale(det, Matrix<Poly>::identity(n),
                                            scratch);
        if (prod != want) {
            ++violations;
        }
    }
    EXPECT(done == 100, "could not draw 100 nonsingular polynomial matrices");
    EXPECT(violations == 0,
           std::to_string(violations) + " polynomial adjugate checks violated");
    return g_problems.empty();
}

bool check_8_growth() {
    // growth of the matrix-product multiplication tally, the quantity the
    // backend choice controls
    std::mt19937_64 rng(2032);
    auto mm_at = [&](std::size_t n, const MulBackend& backend) {
        const Matrix<Int> a = random_int_system(n, n + 1, rng);
        OpCounts ops;
        solve(a, PartitionStrategy::dichotomous(), backend, ops);
        return ops.mm_muls;
    };
    const double classical = std::log2(
        static_cast<double>(mm_at(64, MulBackend::classical())) /
        static_cast<double>(mm_at(32, MulBackend::classical())));
    const double strassen = std::log2(
        static_cast<double>(mm_at(64, MulBackend::strassen(1))) /
        static_cast<double>(mm_at(32, MulBackend::strassen(1))));
    EXPECT(classical >= 2.9, "classical growth exponent " +
                                 std::to_string(classical) + " below 2.9");
    EXPECT(strassen <= 2.85, "strassen growth exponent " +
                                 std::to_string(strassen) + " above 2.85");
    return g_problems.empty();
}

struct Criterion {
    const char* label;
    bool (*body)();
    double budget_s;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"1. reference 4x5 system across 12 strategy/backend combinations",
         check_1_reference_system, 1.0},
        {"2. classical counts equal the closed forms at n=2..32",
         check_2_classical_counts, 10.0},
        {"3. single-sweep counts equal the closed forms; recursion is cheaper",
         check_3_one_pass_counts, 10.0},
        {"4. strassen cutoff-1 muls+divs totals at n=2,4,8",
         check_4_strassen_counts, 10.0},
        {"5. 500-system sweep agrees with the one-pass and brute-force oracles",
         check_5_oracle_sweep, 60.0},
        {"6. exact residuals for square and parametric solutions",
         check_6_residuals, 30.0},
        {"7. A*adj(A) == det(A)*I over integers and polynomials",
         check_7_adjugate, 30.0},
        {"8. growth exponents between n=32 and n=64", check_8_growth, 120.0},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        g_problems.clear();
        const auto start = std::chrono::steady_clock::now();
        bool ok = c.body();
        const double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        if (elapsed > c.budget_s) {
            ok = false;
            g_problems.push_back("exceeded the " +
                                 std::to_string(c.budget_s) + " s budget");
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, " (%.2f s)", elapsed);
        if (ok) {
            std::cout << "[PASS] " << c.label << timing << "\n";
        } else {
            ++failures;
            std::cout << "[FAIL] " << c.label << timing << "\n";
            for (const std::string& p : g_problems) {
                std::cout << "       " << p << "\n";
            }
        }
    }
    if (failures == 0) {
        std::cout << "all 8 acceptance checks passed\n";
    } else {
        std::cout << failures << " acceptance check(s) failed\n";
    }
    return failures;
}
