#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ffred/counter.hpp"
#include "ffred/errors.hpp"
#include "ffred/matmul.hpp"
#include "ffred/matrix.hpp"

namespace ffred {

/*
 * Exact solver for A x = b over an integral domain, organized around one
 * recursive primitive: reduce() takes a block whose entries are bordered
 * minors of order k+1 built over a fixed leading corner, together with the
 * corner minor delta_k of order k, and diagonalizes the block's leading
 * square part by fraction-free row elimination.  It returns the corner minor
 * of order l (l = k + block rows) and the block of substituted minors of
 * order l for the remaining columns.  Every intermediate entry is itself a
 * minor of the original matrix, so all divisions are exact and values never
 * leave the domain.
 *
 * Index conventions: matrices are zero-based; minor orders are one-based
 * counts.  A block passed to reduce() with base_order = k covers matrix rows
 * k..l-1 and columns k..c-1 of the ambient system, where l = k + rows and
 * c = k + cols.  The order-j corner minor is the determinant of rows 0..j-1,
 * columns 0..j-1 of the ambient (possibly row-permuted) matrix.
 *
 * One recursion step splits the block rows at an order s chosen by the
 * partition strategy (k < s < l) and performs:
 *   1. recursive reduction of the upper s-k rows,
 *   2. elimination of the lower rows' left columns against the reduced
 *      upper block (divides by delta_k),
 *   3. recursive reduction of the eliminated lower block,
 *   4. back-substitution of the upper rows' tail columns against the
 *      reduced lower block (divides by delta_s).
 * A single-row block is the base case and costs no operations.
 *
 * All results are independent of the partition strategy and of the
 * multiplication backend; only the operation tally changes.
 */

enum class PartitionKind { Dichotomous, OnePass, ForwardBackUp, Fixed };

// Chooses the split order s with k < s < l for each recursion step.
//  - Dichotomous: halves the rows, upper part never smaller than the lower.
//  - OnePass: lower part is a single row.
//  - ForwardBackUp: upper part is a single row.
//  - Fixed: aims for a caller-chosen absolute order (or a custom chooser),
//    clamped into the valid open interval at every level.
struct PartitionStrategy {
    PartitionKind kind = PartitionKind::Dichotomous;
    std::size_t fixed_order = 0;
    std::function<std::size_t(std::size_t, std::size_t)> chooser;

    std::size_t split(std::size_t k, std::size_t l) const {
        std::size_t s;
        switch (kind) {
            case PartitionKind::Dichotomous:
                s = k + (l - k + 1) / 2;
                break;
            case PartitionKind::OnePass:
                s = l - 1;
                break;
            case PartitionKind::ForwardBackUp:
                s = k + 1;
                break;
            case PartitionKind::Fixed:
                s = chooser ? chooser(k, l) : fixed_order;
                break;
            default:
                throw DomainError("unknown partition kind");
        }
        if (s <= k) {
            s = k + 1;
        }
        if (s >= l) {
            s = l - 1;
        }
        return s;
    }

    std::string name() const {
        switch (kind) {
            case PartitionKind::Dichotomous:
                return "dichotomous";
            case PartitionKind::OnePass:
                return "onepass";
            case PartitionKind::ForwardBackUp:
                return "forward";
            case PartitionKind::Fixed:
                return "fixed=" + std::to_string(fixed_order);
        }
        return "?";
    }

    static PartitionStrategy dichotomous() { return {PartitionKind::Dichotomous, 0, {}}; }
    static PartitionStrategy one_pass() { return {PartitionKind::OnePass, 0, {}}; }
    static PartitionStrategy forward_backup() { return {PartitionKind::ForwardBackUp, 0, {}}; }
    static PartitionStrategy fixed(std::size_t order) { return {PartitionKind::Fixed, order, {}}; }
    static PartitionStrategy custom(std::function<std::size_t(std::size_t, std::size_t)> fn) {
        return {PartitionKind::Fixed, 0, std::move(fn)};
    }
};

template <IntegralDomain T>
struct ReduceResult {
    T delta_l;        // corner minor of order l
    Matrix<T> g_hat;  // substituted minors of order l, columns l..c-1
};

// Optional observer for tests: one record per reduce() call, in completion
// order.  Single-row calls record s == l and an empty eliminated block.
template <IntegralDomain T>
struct ReduceTrace {
    struct Call {
        std::size_t k, s, l, c;
        T delta_s;             // for single-row calls this equals delta_l
        T delta_l;
        Matrix<T> eliminated;  // step-2 output: bordered minors of order s+1
        Matrix<T> g_hat;       // the call's result block
    };
    std::vector<Call> calls;
};

// Step 2: (delta_s * lower_right - lower_left * g_upper) / delta_k.
// lower_left is (l-s) x (s-k), g_upper is (s-k) x (c-s), lower_right and the
// result are (l-s) x (c-s).  The result's entries are bordered minors of
// order s+1, so the division by delta_k is exact.
template <IntegralDomain T>
Matrix<T> eliminate_lower_block(const Matrix<T>& lower_left,
                                const Matrix<T>& lower_right,
                                const Matrix<T>& g_upper, const T& delta_s,
                                const T& delta_k, const MulBackend& backend,
                                OpCounts& ctx) {
    if (lower_left.rows() != lower_right.rows() ||
        lower_left.cols() != g_upper.rows() ||
        g_upper.cols() != lower_right.cols()) {
        throw DimensionMismatch("eliminate_lower_block: inconsistent shapes");
    }
    Matrix<T> scaled = mat_scale(delta_s, lower_right, ctx);
    Matrix<T> cross = mat_mul(lower_left, g_upper, backend, ctx);
    return mat_div_scalar(mat_sub(scaled, cross, ctx), delta_k, ctx);
}

// Step 4: (delta_l * g_upper_tail - g_upper_mid * g_lower_tail) / delta_s.
// g_upper_mid is (s-k) x (l-s), g_lower_tail is (l-s) x (c-l), g_upper_tail
// and the result are (s-k) x (c-l).
template <IntegralDomain T>
Matrix<T> backsubstitute_upper_block(const Matrix<T>& g_upper_mid,
                                     const Matrix<T>& g_upper_tail,
                                     const Matrix<T>& g_lower_tail,
                                     const T& delta_l, const T& delta_s,
                                     const MulBackend& backend, OpCounts& ctx) {
    if (g_upper_mid.rows() != g_upper_tail.rows() ||
        g_upper_mid.cols() != g_lower_tail.rows() ||
        g_lower_tail.cols() != g_upper_tail.cols()) {
        throw DimensionMismatch("backsubstitute_upper_block: inconsistent shapes");
    }
    Matrix<T> scaled = mat_scale(delta_l, g_upper_tail, ctx);
    Matrix<T> cross = mat_mul(g_upper_mid, g_lower_tail, backend, ctx);
    return mat_div_scalar(mat_sub(scaled, cross, ctx), delta_s, ctx);
}

template <IntegralDomain T>
ReduceResult<T> reduce(const Matrix<T>& a_tilde, const T& delta_k,
                       const PartitionStrategy& strategy,
                       const MulBackend& backend, OpCounts& ctx,
                       std::size_t base_order = 0,
                       ReduceTrace<T>* trace = nullptr) {
    const std::size_t rows = a_tilde.rows();
    const std::size_t cols = a_tilde.cols();
    if (rows == 0) {
        throw ShapeError("reduce: block needs at least one row");
    }
    if (cols < rows) {
        throw ShapeError("reduce: block needs at least as many columns as rows");
    }
    const std::size_t k = base_order;
    const std::size_t l = k + rows;
    const std::size_t c = k + cols;

    if (rows == 1) {
        const T& head = a_tilde(0, 0);
        if (is_zero(head)) {
            throw SingularMinor(
                "leading corner minor of order " + std::to_string(l) + " is zero",
                SingularReport{l, {}, 1});
        }
        ReduceResult<T> out{head, block(a_tilde, 0, 1, 1, cols)};
        if (trace) {
            trace->calls.push_back(
                {k, l, l, c, out.delta_l, out.delta_l, Matrix<T>(), out.g_hat});
        }
        return out;
    }

    const std::size_t s = strategy.split(k, l);
    const std::size_t up = s - k;

    ReduceResult<T> upper = reduce(block(a_tilde, 0, up, 0, cols), delta_k,
                                   strategy, backend, ctx, k, trace);

    Matrix<T> eliminated = eliminate_lower_block(
        block(a_tilde, up, rows, 0, up), block(a_tilde, up, rows, up, cols),
        upper.g_hat, upper.delta_l, delta_k, backend, ctx);

    ReduceResult<T> lower = reduce(eliminated, upper.delta_l, strategy, backend,
                                   ctx, s, trace);

    Matrix<T> g_top = backsubstitute_upper_block(
        block(upper.g_hat, 0, up, 0, rows - up),
        block(upper.g_hat, 0, up, rows - up, cols - up), lower.g_hat,
        lower.delta_l, upper.delta_l, backend, ctx);

    ReduceResult<T> out{lower.delta_l, vconcat(g_top, lower.g_hat)};
    if (trace) {
        trace->calls.push_back({k, s, l, c, upper.delta_l, out.delta_l,
                                std::move(eliminated), out.g_hat});
    }
    return out;
}

// Row permutation making every leading corner minor of the first rows() x
// rows() block nonzero, found by one fraction-free elimination pass with row
// pivoting.  Returns (permutation, sign); permutation[i] is the source row
// of destination row i and sign is its parity.  Prefers the identity: a row
// is moved only when the current pivot is zero.  Throws StructurallySingular
// when the leading square block is rank deficient, in which case no order
// works.  Not instrumented; preconditioning is outside the counted run.
template <IntegralDomain T>
std::pair<std::vector<std::size_t>, int> precondition_permute(
    const Matrix<T>& a_ext) {
    const std::size_t n = a_ext.rows();
    if (a_ext.cols() < n) {
        throw ShapeError("precondition_permute: fewer columns than rows");
    }
    Matrix<T> w = block(a_ext, 0, n, 0, n);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
        perm[i] = i;
    }
    int sign = 1;
    T prev = T(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && is_zero(w(pivot, k))) {
            ++pivot;
        }
        if (pivot == n) {
            throw StructurallySingular(
                "leading square block is rank deficient: no pivot in column " +
                std::to_string(k) + " under any row order");
        }
        if (pivot != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w(k, j), w(pivot, j));
            }
            std::swap(perm[k], perm[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                w(i, j) = exact_div(T(w(k, k) * w(i, j) - w(i, k) * w(k, j)), prev);
            }
        }
        prev = w(k, k);
    }
    return {std::move(perm), sign};
}

template <IntegralDomain T>
Matrix<T> apply_row_permutation(const Matrix<T>& a,
                                const std::vector<std::size_t>& perm) {
    if (perm.size() != a.rows()) {
        throw DimensionMismatch("apply_row_permutation: size mismatch");
    }
    Matrix<T> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(i, j) = a(perm[i], j);
        }
    }
    return out;
}

// Solution of the first n columns against the remaining m-n, presented as
// exact minors over a common denominator.  For a square system (m == n+1)
// column 0 of minors holds the numerators and x_i = minors(i,0) / delta_n.
// For m > n+1 the trailing columns n..m-2 of the input are free:
//   x_i = (minors(i, m-n-1) - sum_p minors(i, p-n) * x_p) / delta_n
// with p ranging over the free columns.  When a permutation was applied the
// minors describe the permuted system; the solution set is unchanged and
// sign records the parity.
template <IntegralDomain T>
struct ParametricSolution {
    std::size_t n = 0;
    std::size_t m = 0;
    T delta_n;
    Matrix<T> minors;
    std::vector<std::size_t> permutation;
    int sign = 1;
};

template <IntegralDomain T>
ParametricSolution<T> solve(const Matrix<T>& a_ext,
                            const PartitionStrategy& strategy,
                            const MulBackend& backend, OpCounts& ctx,
                            bool permute = false,
                            ReduceTrace<T>* trace = nullptr) {
    const std::size_t n = a_ext.rows();
    const std::size_t m = a_ext.cols();
    if (m <= n) {
        throw ShapeError("solve: system needs more columns than rows");
    }
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) {
        perm[i] = i;
    }
    int sign = 1;
    Matrix<T> work = a_ext;
    if (permute) {
        auto [p, sg] = precondition_permute(a_ext);
        work = apply_row_permutation(a_ext, p);
        perm = std::move(p);
        sign = sg;
    }
    try {
        ReduceResult<T> r =
            reduce(work, T(1), strategy, backend, ctx, 0, trace);
        return {n, m, std::move(r.delta_l), std::move(r.g_hat), std::move(perm),
                sign};
    } catch (SingularMinor& e) {
        if (permute) {
            e.report.permutation = perm;
            e.report.sign = sign;
        }
        throw;
    }
}

// Determinant of a square matrix, sign-corrected when preconditioning
// permuted rows.  With permute set, a rank-deficient input yields zero
// instead of an error; without it, any vanishing corner minor is reported
// fail-fast even if the determinant itself is nonzero.
template <IntegralDomain T>
T determinant(const Matrix<T>& a, const PartitionStrategy& strategy,
              const MulBackend& backend, OpCounts& ctx, bool permute = false) {
    if (a.rows() != a.cols()) {
        throw ShapeError("determinant: matrix is not square");
    }
    const std::size_t n = a.rows();
    if (n == 0) {
        return T(1);
    }
    if (!permute) {
        return reduce(a, T(1), strategy, backend, ctx).delta_l;
    }
    std::vector<std::size_t> perm;
    int sign = 1;
    try {
        auto [p, sg] = precondition_permute(a);
        perm = std::move(p);
        sign = sg;
    } catch (const StructurallySingular&) {
        return T();
    }
    T det = reduce(apply_row_permutation(a, perm), T(1), strategy, backend, ctx)
                .delta_l;
    return sign < 0 ? T(-det) : det;
}

// Adjugate via reduction of (a | I): the substituted minors of the extended
// system are exactly the adjugate's entries, and a * adj(a) = det(a) * I.
// Requires the same nonzero-corner-minor structure as solve; permute uses
// row preconditioning on the extended matrix and corrects the sign.
template <IntegralDomain T>
Matrix<T> adjugate(const Matrix<T>& a, const PartitionStrategy& strategy,
                   const MulBackend& backend, OpCounts& ctx,
                   bool permute = false) {
    if (a.rows() != a.cols()) {
        throw ShapeError("adjugate: matrix is not square");
    }
    const std::size_t n = a.rows();
    if (n == 0) {
        return Matrix<T>(0, 0);
    }
    Matrix<T> ext = hconcat(a, Matrix<T>::identity(n));
    ParametricSolution<T> sol =
        solve(ext, strategy, backend, ctx, permute);
    if (sol.sign < 0) {
        OpCounts scratch;  // sign flip is bookkeeping, not a counted op
        return mat_scale(T(-1), sol.minors, scratch);
    }
    return sol.minors;
}

}  // namespace ffred
