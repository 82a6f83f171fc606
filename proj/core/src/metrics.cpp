#include "ffred/metrics.hpp"

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <ostream>

#include "ffred/errors.hpp"
#include "ffred/int_ring.hpp"
#include "ffred/oracle.hpp"

namespace ffred {

namespace {

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

std::int64_t log2_exact(std::size_t n) {
    return static_cast<std::int64_t>(std::countr_zero(n));
}

std::uint64_t exact_ratio(std::int64_t numerator, std::int64_t denominator) {
    if (numerator < 0 || numerator % denominator != 0) {
        throw DomainError("count formula produced a non-integral value");
    }
    return static_cast<std::uint64_t>(numerator / denominator);
}

MatMulCost classical_cost(std::size_t l, std::size_t n, std::size_t c) {
    if (n == 0) {
        return {};
    }
    return {static_cast<std::uint64_t>(l) * n * c,
            static_cast<std::uint64_t>(l) * (n - 1) * c};
}

// Mirrors detail::mul_strassen branch by branch.
MatMulCost strassen_cost(std::size_t l, std::size_t n, std::size_t c,
                         std::size_t cutoff) {
    if (l == 0 || c == 0) {
        return {};
    }
    const std::size_t mindim = n < l ? (n < c ? n : c) : (l < c ? l : c);
    if (mindim <= cutoff) {
        return classical_cost(l, n, c);
    }
    if (l == n && c > n) {
        MatMulCost total;
        for (std::size_t j0 = 0; j0 < c; j0 += n) {
            const std::size_t w = j0 + n < c ? n : c - j0;
            const MatMulCost part = strassen_cost(n, n, w, cutoff);
            total.muls += part.muls;
            total.adds += part.adds;
        }
        return total;
    }
    const std::size_t l2 = (l + 1) / 2, n2 = (n + 1) / 2, c2 = (c + 1) / 2;
    const MatMulCost half = strassen_cost(l2, n2, c2, cutoff);
    return {7 * half.muls,
            7 * half.adds + 5 * static_cast<std::uint64_t>(l2) * n2 +
                5 * static_cast<std::uint64_t>(n2) * c2 +
                8 * static_cast<std::uint64_t>(l2) * c2};
}

void charge_matmul(OpCounts& ops, const MatMulCost& cost) {
    ops.muls += cost.muls;
    ops.mm_muls += cost.muls;
    ops.adds += cost.adds;
}

// Walks the reduce() recursion over ambient orders (k, l) and ambient column
// count c, charging what each step's kernels would count.  The one
// structural approximation is noted on predict_tree's declaration: the
// step-2 divisor is delta_k, taken to be a unit exactly when k == 0.
void walk_reduce(std::size_t k, std::size_t l, std::size_t c,
                 const PartitionStrategy& strategy, const MulBackend& backend,
                 OpCounts& ops) {
    if (l - k == 1) {
        return;
    }
    const std::size_t s = strategy.split(k, l);
    const std::size_t up = s - k, low = l - s;
    const std::size_t width = c - s, tail = c - l;

    walk_reduce(k, s, c, strategy, backend, ops);

    ops.muls += static_cast<std::uint64_t>(low) * width;  // scale by delta_s
    charge_matmul(ops, backend.kind == MulKind::Classical
                           ? classical_cost(low, up, width)
                           : strassen_cost(low, up, width, backend.cutoff));
    ops.adds += static_cast<std::uint64_t>(low) * width;  // subtract cross
    (k == 0 ? ops.unit_divs : ops.divs) +=
        static_cast<std::uint64_t>(low) * width;  // divide by delta_k

    walk_reduce(s, l, c, strategy, backend, ops);

    ops.muls += static_cast<std::uint64_t>(up) * tail;  // scale by delta_l
    charge_matmul(ops, backend.kind == MulKind::Classical
                           ? classical_cost(up, low, tail)
                           : strassen_cost(up, low, tail, backend.cutoff));
    ops.adds += static_cast<std::uint64_t>(up) * tail;
    ops.divs += static_cast<std::uint64_t>(up) * tail;  // divide by delta_s
}

std::string backend_name(const MulBackend& backend) {
    if (backend.kind == MulKind::Classical) {
        return "classical";
    }
    return "strassen(cutoff=" + std::to_string(backend.cutoff) + ")";
}

}  // namespace

PredictedCounts predict_classical(std::size_t n, std::size_t m) {
    if (!is_pow2(n) || m < n + 1) {
        throw DomainError(
            "predict_classical: needs power-of-two n and m >= n+1");
    }
    const auto N = static_cast<std::int64_t>(n);
    const auto M = static_cast<std::int64_t>(m);
    const std::int64_t p = log2_exact(n);
    return {
        exact_ratio(6 * N * N * M - 4 * N * N * N - 6 * N * M + 3 * N * N + N,
                    6),
        exact_ratio(6 * N * N * M - 4 * N * N * N +
                        (6 * N * M - 3 * N * N) * p - 6 * N * M + 4 * N,
                    6),
        exact_ratio((6 * N * M - 3 * N * N) * p - 6 * N * M - N * N + 6 * M +
                        3 * N - 2,
                    6),
    };
}

PredictedCounts predict_onepass(std::size_t n) {
    if (n == 0) {
        throw DomainError("predict_onepass: needs n >= 1");
    }
    const auto N = static_cast<std::int64_t>(n);
    return {
        exact_ratio(N * (N - 1) * (2 * N + 5), 6),
        exact_ratio((N - 1) * (N + 1) * (N + 2), 2),
        exact_ratio((N - 1) * (N - 2) * (N + 3), 6),
    };
}

std::uint64_t predict_strassen_md(std::size_t n) {
    if (!is_pow2(n) || n < 2) {
        throw DomainError(
            "predict_strassen_md: needs power-of-two n >= 2");
    }
    const auto N = static_cast<std::int64_t>(n);
    const std::int64_t p = log2_exact(n);
    std::int64_t pow7 = 7;
    for (std::int64_t i = 0; i < p; ++i) {
        pow7 *= 7;
    }
    return exact_ratio(pow7 + 15 * N * N * p - 10 * N * N + 30 * N * p + 3 * N,
                       15);
}

MatMulCost matmul_cost(std::size_t l, std::size_t n, std::size_t c,
                       const MulBackend& backend) {
    return backend.kind == MulKind::Classical
               ? classical_cost(l, n, c)
               : strassen_cost(l, n, c, backend.cutoff);
}

OpCounts predict_tree(std::size_t n, std::size_t m,
                      const PartitionStrategy& strategy,
                      const MulBackend& backend) {
    if (n == 0 || m < n) {
        throw DomainError("predict_tree: needs 1 <= n <= m");
    }
    OpCounts ops;
    walk_reduce(0, n, m, strategy, backend, ops);
    return ops;
}

Matrix<Int> random_int_system(std::size_t n, std::size_t m,
                              std::mt19937_64& rng, bool avoid_unit_minors) {
    if (n == 0 || m < n) {
        throw DomainError("random_int_system: needs 1 <= n <= m");
    }
    std::uniform_int_distribution<int> entry(-9, 9);
    for (;;) {
        Matrix<Int> a(n, m);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                a(i, j) = Int(entry(rng));
            }
        }
        try {
            OpCounts scratch;
            const auto probe = bareiss_one_pass(a, scratch);
            if (avoid_unit_minors) {
                bool unit = false;
                for (std::size_t j = 0; j + 1 < n; ++j) {
                    if (is_one(probe.delta_seq[j])) {
                        unit = true;
                        break;
                    }
                }
                if (unit) {
                    continue;
                }
            }
            return a;
        } catch (const SingularMinor&) {
            // some corner minor vanished; draw again
        }
    }
}

std::vector<SweepRow> sweep(const std::vector<std::size_t>& sizes,
                            const PartitionStrategy& strategy,
                            const MulBackend& backend, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<SweepRow> rows;
    rows.reserve(sizes.size());
    for (const std::size_t n : sizes) {
        const std::size_t m = n + 1;
        const Matrix<Int> a = random_int_system(n, m, rng);
        SweepRow row;
        row.n = n;
        row.m = m;
        row.strategy = strategy.name();
        row.backend = backend_name(backend);
        row.predicted = predict_tree(n, m, strategy, backend);
        const auto t0 = std::chrono::steady_clock::now();
        solve(a, strategy, backend, row.counts);
        const auto t1 = std::chrono::steady_clock::now();
        row.wall_ns = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0)
                .count());
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << "size_n,size_m,strategy,backend,adds,muls,divs,"
           "predicted_adds,predicted_muls,predicted_divs,wall_ns\n";
    for (const SweepRow& r : rows) {
        out << r.n << ',' << r.m << ',' << r.strategy << ',' << r.backend
            << ',' << r.counts.adds << ',' << r.counts.muls << ','
            << r.counts.divs << ',' << r.predicted.adds << ','
            << r.predicted.muls << ',' << r.predicted.divs << ',' << r.wall_ns
            << '\n';
    }
}

std::vector<GrowthPoint> growth_exponents(const std::vector<SweepRow>& rows) {
    std::vector<GrowthPoint> points;
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        const SweepRow& a = rows[i];
        const SweepRow& b = rows[i + 1];
        if (b.n != 2 * a.n || a.counts.mm_muls == 0 || a.counts.muls == 0 ||
            a.counts.adds == 0) {
            continue;
        }
        points.push_back(
            {a.n, b.n,
             std::log2(static_cast<double>(b.counts.mm_muls) /
                       static_cast<double>(a.counts.mm_muls)),
             std::log2(static_cast<double>(b.counts.muls) /
                       static_cast<double>(a.counts.muls)),
             std::log2(static_cast<double>(b.counts.adds) /
                       static_cast<double>(a.counts.adds))});
    }
    return points;
}

}  // namespace ffred
