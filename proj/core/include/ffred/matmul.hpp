#pragma once

#include <cstddef>

#include "ffred/counter.hpp"
#include "ffred/matrix.hpp"

namespace ffred {

enum class MulKind { Classical, Strassen };

// Which matrix product implementation to use and where Strassen bottoms out.
// A product falls back to the classical kernel as soon as its smallest
// dimension is at or below cutoff, so cutoff >= max dimension makes Strassen
// behave (and count) exactly like Classical.
struct MulBackend {
    MulKind kind = MulKind::Classical;
    std::size_t cutoff = 8;

    static MulBackend classical() { return {MulKind::Classical, 0}; }
    static MulBackend strassen(std::size_t cutoff = 8) {
        return {MulKind::Strassen, cutoff};
    }
};

namespace detail {

template <IntegralDomain T>
Matrix<T> mul_classical(const Matrix<T>& a, const Matrix<T>& b, OpCounts& ctx) {
    const std::size_t l = a.rows(), n = a.cols(), c = b.cols();
    Matrix<T> out(l, c);
    if (n == 0) {
        return out;  // empty inner dimension: all-zero product, no ops
    }
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            T acc = cmul(a(i, 0), b(0, j), ctx);
            for (std::size_t t = 1; t < n; ++t) {
                acc = cadd(acc, cmul(a(i, t), b(t, j), ctx), ctx);
            }
            out(i, j) = std::move(acc);
        }
    }
    ctx.mm_muls += static_cast<std::uint64_t>(l) * n * c;
    return out;
}

template <IntegralDomain T>
Matrix<T> pad_to(const Matrix<T>& a, std::size_t rows, std::size_t cols) {
    Matrix<T> out(rows, cols);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(i, j) = a(i, j);
        }
    }
    return out;
}

template <IntegralDomain T>
Matrix<T> block_add(const Matrix<T>& a, const Matrix<T>& b, OpCounts& ctx) {
    Matrix<T> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(i, j) = cadd(a(i, j), b(i, j), ctx);
        }
    }
    return out;
}

template <IntegralDomain T>
Matrix<T> block_sub(const Matrix<T>& a, const Matrix<T>& b, OpCounts& ctx) {
    Matrix<T> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(i, j) = csub(a(i, j), b(i, j), ctx);
        }
    }
    return out;
}

template <IntegralDomain T>
Matrix<T> mul_strassen(const Matrix<T>& a, const Matrix<T>& b,
                       std::size_t cutoff, OpCounts& ctx) {
    const std::size_t l = a.rows(), n = a.cols(), c = b.cols();
    if (l == 0 || c == 0) {
        return Matrix<T>(l, c);
    }
    const std::size_t mindim = n < l ? (n < c ? n : c) : (l < c ? l : c);
    if (mindim <= cutoff) {
        return mul_classical(a, b, ctx);
    }

    // Wide product with a square left factor: multiply column slabs of the
    // right factor, one square Strassen product per full slab plus one
    // narrow tail.  This keeps the recursion on genuinely square shapes
    // instead of manufacturing padded columns, and it is the shape every
    // solver-issued product has.
    if (l == n && c > n) {
        Matrix<T> out(l, c);
        for (std::size_t j0 = 0; j0 < c; j0 += n) {
            const std::size_t j1 = j0 + n < c ? j0 + n : c;
            Matrix<T> part = mul_strassen(a, block(b, 0, n, j0, j1), cutoff, ctx);
            for (std::size_t i = 0; i < l; ++i) {
                for (std::size_t j = j0; j < j1; ++j) {
                    out(i, j) = std::move(part(i, j - j0));
                }
            }
        }
        return out;
    }

    // General case: pad every odd dimension up to even, split in half, run
    // the seven-product scheme on the halves, trim the result.  Products
    // that involve padded zeros are still ordinary element multiplications
    // and are counted as such.
    const std::size_t l2 = (l + 1) / 2, n2 = (n + 1) / 2, c2 = (c + 1) / 2;
    const Matrix<T> ap = (l % 2 || n % 2) ? pad_to(a, 2 * l2, 2 * n2) : a;
    const Matrix<T> bp = (n % 2 || c % 2) ? pad_to(b, 2 * n2, 2 * c2) : b;

    const Matrix<T> a11 = block(ap, 0, l2, 0, n2);
    const Matrix<T> a12 = block(ap, 0, l2, n2, 2 * n2);
    const Matrix<T> a21 = block(ap, l2, 2 * l2, 0, n2);
    const Matrix<T> a22 = block(ap, l2, 2 * l2, n2, 2 * n2);
    const Matrix<T> b11 = block(bp, 0, n2, 0, c2);
    const Matrix<T> b12 = block(bp, 0, n2, c2, 2 * c2);
    const Matrix<T> b21 = block(bp, n2, 2 * n2, 0, c2);
    const Matrix<T> b22 = block(bp, n2, 2 * n2, c2, 2 * c2);

    const Matrix<T> m1 =
        mul_strassen(block_add(a11, a22, ctx), block_add(b11, b22, ctx), cutoff, ctx);
    const Matrix<T> m2 = mul_strassen(block_add(a21, a22, ctx), b11, cutoff, ctx);
    const Matrix<T> m3 = mul_strassen(a11, block_sub(b12, b22, ctx), cutoff, ctx);
    const Matrix<T> m4 = mul_strassen(a22, block_sub(b21, b11, ctx), cutoff, ctx);
    const Matrix<T> m5 = mul_strassen(block_add(a11, a12, ctx), b22, cutoff, ctx);
    const Matrix<T> m6 =
        mul_strassen(block_sub(a21, a11, ctx), block_add(b11, b12, ctx), cutoff, ctx);
    const Matrix<T> m7 =
        mul_strassen(block_sub(a12, a22, ctx), block_add(b21, b22, ctx), cutoff, ctx);

    const Matrix<T> c11 =
        block_add(block_sub(block_add(m1, m4, ctx), m5, ctx), m7, ctx);
    const Matrix<T> c12 = block_add(m3, m5, ctx);
    const Matrix<T> c21 = block_add(m2, m4, ctx);
    const Matrix<T> c22 =
        block_add(block_add(block_sub(m1, m2, ctx), m3, ctx), m6, ctx);

    Matrix<T> out(l, c);
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            const std::size_t bi = i < l2 ? i : i - l2;
            const std::size_t bj = j < c2 ? j : j - c2;
            if (i < l2 && j < c2) {
                out(i, j) = c11(bi, bj);
            } else if (i < l2) {
                out(i, j) = c12(bi, bj);
            } else if (j < c2) {
                out(i, j) = c21(bi, bj);
            } else {
                out(i, j) = c22(bi, bj);
            }
        }
    }
    return out;
}

}  // namespace detail

// Matrix product a (l x n) times b (n x c) under the chosen backend.  Both
// backends produce identical values; only the operation tally differs.
template <IntegralDomain T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b,
                  const MulBackend& backend, OpCounts& ctx) {
    if (a.cols() != b.rows()) {
        throw DimensionMismatch("mat_mul: inner dimensions differ");
    }
    if (backend.kind == MulKind::Classical) {
        return detail::mul_classical(a, b, ctx);
    }
    return detail::mul_strassen(a, b, backend.cutoff, ctx);
}

template <IntegralDomain T>
Matrix<T> mat_scale(const T& s, const Matrix<T>& a, OpCounts& ctx) {
    Matrix<T> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(i, j) = cmul(s, a(i, j), ctx);
        }
    }
    return out;
}

template <IntegralDomain T>
Matrix<T> mat_sub(const Matrix<T>& a, const Matrix<T>& b, OpCounts& ctx) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw DimensionMismatch("mat_sub: shapes differ");
    }
    return detail::block_sub(a, b, ctx);
}

// Entrywise exact division by d.  Every entry must be a multiple of d.
template <IntegralDomain T>
Matrix<T> mat_div_scalar(const Matrix<T>& a, const T& d, OpCounts& ctx) {
    Matrix<T> out(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(i, j) = cdiv(a(i, j), d, ctx);
        }
    }
    return out;
}

}  // namespace ffred
