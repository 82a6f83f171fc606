#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "ffred/counter.hpp"
#include "ffred/errors.hpp"
#include "ffred/matrix.hpp"
#include "ffred/ring.hpp"

namespace ffred {

/*
 * Reference implementations used to cross-check the block solver.  Nothing
 * here shares code with the solver kernels: the single-sweep eliminator
 * below works row by row, and the minor evaluators expand determinants
 * directly.  Agreement between these and the recursive reduction is the
 * strongest correctness evidence the test suite has.
 */

template <IntegralDomain T>
struct OracleResult {
    std::vector<T> delta_seq;  // corner minors of orders 1..n
    Matrix<T> g;               // substituted minors of order n, columns n..m-1
};

/*
 * Single-sweep fraction-free elimination (Bareiss-Jordan family).  Rows are
 * taken up once each, top to bottom.  Taking up row k (order k, one-based):
 *
 *   forward:  v_j = delta_{k-1} * a(k,j) - sum_{t<k} a(k,t) * w(t,j)
 *             over columns j >= k, combining the untouched original row
 *             with the already-diagonalized rows above; the divisor this
 *             identity calls for is the empty corner minor, i.e. one, so no
 *             division happens.  v_k is the new corner minor delta_k.
 *   back:     w(i,j) <- (delta_k * w(i,j) - w(i,k) * v_j) / delta_{k-1}
 *             over rows i < k and columns j > k, an exact division.
 *
 * The division tally follows the published counting for this method, which
 * books the back-substitution divisions of every row take-up except the
 * last one; the final sweep's divisions are performed here but excluded
 * from the divs tally (they are not added to unit_divs either).  Adds and
 * muls are booked for every element operation as usual.
 */
template <IntegralDomain T>
OracleResult<T> bareiss_one_pass(const Matrix<T>& a_ext, OpCounts& ctx) {
    const std::size_t n = a_ext.rows();
    const std::size_t m = a_ext.cols();
    if (n == 0 || m < n) {
        throw ShapeError("bareiss_one_pass: need 1 <= rows <= cols");
    }
    Matrix<T> w = a_ext;
    std::vector<T> deltas;
    deltas.reserve(n);

    for (std::size_t r = 0; r < n; ++r) {  // row r carries order k = r + 1
        std::vector<T> v(m);
        if (r == 0) {
            for (std::size_t j = 0; j < m; ++j) {
                v[j] = w(0, j);
            }
        } else {
            const T& prev = deltas[r - 1];
            for (std::size_t j = r; j < m; ++j) {
                T acc = cmul(prev, w(r, j), ctx);
                T sum = cmul(w(r, 0), w(0, j), ctx);
                for (std::size_t t = 1; t < r; ++t) {
                    sum = cadd(sum, cmul(w(r, t), w(t, j), ctx), ctx);
                }
                v[j] = csub(acc, sum, ctx);
            }
        }
        if (is_zero(v[r])) {
            throw SingularMinor("leading corner minor of order " +
                                    std::to_string(r + 1) + " is zero",
                                SingularReport{r + 1, {}, 1});
        }
        if (r > 0) {
            const T& prev = deltas[r - 1];
            const bool final_sweep = (r + 1 == n);
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = r + 1; j < m; ++j) {
                    T num = csub(cmul(v[r], w(i, j), ctx),
                                 cmul(w(i, r), v[j], ctx), ctx);
                    w(i, j) = final_sweep ? exact_div(num, prev)
                                          : cdiv(num, prev, ctx);
                }
            }
        }
        for (std::size_t j = r; j < m; ++j) {
            w(r, j) = std::move(v[j]);
        }
        deltas.push_back(w(r, r));
    }
    return {std::move(deltas), block(w, 0, n, n, m)};
}

namespace detail {

template <IntegralDomain T>
T laplace_det_rec(const Matrix<T>& a) {
    const std::size_t n = a.rows();
    if (n == 0) {
        return T(1);
    }
    if (n == 1) {
        return a(0, 0);
    }
    T acc{};
    for (std::size_t j = 0; j < n; ++j) {
        if (is_zero(a(0, j))) {
            continue;
        }
        Matrix<T> sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t out_col = 0;
            for (std::size_t jj = 0; jj < n; ++jj) {
                if (jj == j) {
                    continue;
                }
                sub(i - 1, out_col++) = a(i, jj);
            }
        }
        T term = T(a(0, j) * laplace_det_rec(sub));
        acc = (j % 2 == 0) ? T(acc + term) : T(acc - term);
    }
    return acc;
}

}  // namespace detail

// Cofactor-expansion determinant.  Factorial cost, so the size is capped;
// this exists to validate other code, not to be fast.
template <IntegralDomain T>
T laplace_det(const Matrix<T>& a) {
    if (a.rows() != a.cols()) {
        throw ShapeError("laplace_det: matrix is not square");
    }
    if (a.rows() > 7) {
        throw DomainError("laplace_det: capped at 7x7 (factorial cost)");
    }
    return detail::laplace_det_rec(a);
}

// Substituted minor: determinant of the order-k leading corner with column
// col_replace (zero-based, < k) replaced by column col_with (>= k).  Brute
// force via laplace_det, so k <= 7.
template <IntegralDomain T>
T substituted_minor(const Matrix<T>& a, std::size_t k, std::size_t col_replace,
                    std::size_t col_with) {
    if (k > a.rows() || col_with >= a.cols()) {
        throw IndexError("substituted_minor: order or column out of range");
    }
    if (!(col_replace < k && col_with >= k)) {
        throw IndexError(
            "substituted_minor: need col_replace < k <= col_with");
    }
    Matrix<T> sub(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            sub(i, j) = a(i, j == col_replace ? col_with : j);
        }
    }
    return laplace_det(sub);
}

// Bordered minor: determinant of the order k-1 leading corner extended by
// row `row` and column `col` (both zero-based, >= k-1).  Order k >= 1; the
// order-1 case is just the entry itself.
template <IntegralDomain T>
T bordered_minor(const Matrix<T>& a, std::size_t k, std::size_t row,
                 std::size_t col) {
    if (k == 0 || row >= a.rows() || col >= a.cols()) {
        throw IndexError("bordered_minor: order or position out of range");
    }
    if (row + 1 < k || col + 1 < k) {
        throw IndexError("bordered_minor: row and column must border the corner");
    }
    Matrix<T> sub(k, k);
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t src_i = (i + 1 == k) ? row : i;
        for (std::size_t j = 0; j < k; ++j) {
            sub(i, j) = a(src_i, (j + 1 == k) ? col : j);
        }
    }
    return laplace_det(sub);
}

}  // namespace ffred
