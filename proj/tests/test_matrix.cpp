#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ffred/int_ring.hpp"
#include "ffred/matmul.hpp"
#include "ffred/matrix.hpp"
#include "ffred/poly_ring.hpp"

using namespace ffred;

namespace {

Matrix<Int> random_matrix(std::size_t r, std::size_t c, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> entry(-9, 9);
    Matrix<Int> m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            m(i, j) = Int(entry(rng));
        }
    }
    return m;
}

}  // namespace

TEST_CASE("construction and access") {
    Matrix<Int> z(2, 3);
    CHECK(z.rows() == 2);
    CHECK(z.cols() == 3);
    CHECK(z(1, 2) == Int(0));

    Matrix<Int> a{{Int(1), Int(2)}, {Int(3), Int(4)}};
    CHECK(a(1, 0) == Int(3));
    CHECK(a.at(1, 1) == Int(4));
    CHECK_THROWS_AS(a.at(2, 0), IndexError);
    CHECK_THROWS_AS(a.at(0, 2), IndexError);

    CHECK_THROWS_AS(Matrix<Int>(2, 2, {Int(1), Int(2), Int(3)}),
                    DimensionMismatch);
    using Init = std::initializer_list<std::initializer_list<Int>>;
    CHECK_THROWS_AS(Matrix<Int>(Init{{Int(1), Int(2)}, {Int(3)}}),
                    DimensionMismatch);

    CHECK(Matrix<Int>::identity(2) ==
          Matrix<Int>{{Int(1), Int(0)}, {Int(0), Int(1)}});
    CHECK(format(a) == "1 2\n3 4\n");
}

TEST_CASE("block, hconcat, vconcat") {
    Matrix<Int> a{{Int(1), Int(2), Int(3)}, {Int(4), Int(5), Int(6)}};
    CHECK(block(a, 0, 2, 1, 3) ==
          Matrix<Int>{{Int(2), Int(3)}, {Int(5), Int(6)}});
    CHECK(block(a, 1, 1, 0, 3).rows() == 0);  // empty slice is fine
    CHECK_THROWS_AS(block(a, 0, 3, 0, 1), IndexError);
    CHECK_THROWS_AS(block(a, 1, 0, 0, 1), IndexError);  // reversed bounds

    Matrix<Int> b{{Int(7)}, {Int(8)}};
    CHECK(hconcat(a, b) == Matrix<Int>{{Int(1), Int(2), Int(3), Int(7)},
                                       {Int(4), Int(5), Int(6), Int(8)}});
    CHECK_THROWS_AS(hconcat(a, Matrix<Int>(3, 1)), DimensionMismatch);

    Matrix<Int> c{{Int(9), Int(9), Int(9)}};
    CHECK(vconcat(a, c).rows() == 3);
    CHECK_THROWS_AS(vconcat(a, Matrix<Int>(1, 2)), DimensionMismatch);
}

TEST_CASE("classical product values and counts") {
    Matrix<Int> a{{Int(1), Int(2)}, {Int(3), Int(4)}};
    Matrix<Int> b{{Int(5), Int(6), Int(7)}, {Int(8), Int(9), Int(10)}};
    OpCounts ctx;
    CHECK(mat_mul(a, b, MulBackend::classical(), ctx) ==
          Matrix<Int>{{Int(21), Int(24), Int(27)},
                      {Int(47), Int(54), Int(61)}});
    CHECK(ctx.muls == 2 * 2 * 3);
    CHECK(ctx.adds == 2 * 1 * 3);
    CHECK(ctx.mm_muls == ctx.muls);

    CHECK_THROWS_AS(mat_mul(a, Matrix<Int>(3, 1), MulBackend::classical(), ctx),
                    DimensionMismatch);

    // inner dimension zero: a well-defined all-zero product, no operations
    OpCounts zero_ctx;
    CHECK(mat_mul(Matrix<Int>(2, 0), Matrix<Int>(0, 3),
                  MulBackend::classical(), zero_ctx) == Matrix<Int>(2, 3));
    CHECK(zero_ctx == OpCounts{});
}

TEST_CASE("strassen equals classical on values for awkward shapes") {
    std::mt19937_64 rng(11);
    for (auto [l, n, c] : {std::tuple<std::size_t, std::size_t, std::size_t>
                               {1, 1, 1}, {2, 2, 2}, {5, 3, 7}, {4, 4, 4},
                               {4, 4, 9}, {8, 8, 8}, {3, 8, 2}, {7, 7, 7},
                               {6, 1, 5}, {8, 8, 17}}) {
        Matrix<Int> a = random_matrix(l, n, rng);
        Matrix<Int> b = random_matrix(n, c, rng);
        OpCounts cc, cs1, cs2;
        const Matrix<Int> want = mat_mul(a, b, MulBackend::classical(), cc);
        CHECK(mat_mul(a, b, MulBackend::strassen(1), cs1) == want);
        CHECK(mat_mul(a, b, MulBackend::strassen(2), cs2) == want);
    }
}

TEST_CASE("strassen at or below cutoff degenerates to classical counts") {
    std::mt19937_64 rng(12);
    Matrix<Int> a = random_matrix(6, 5, rng);
    Matrix<Int> b = random_matrix(5, 4, rng);
    OpCounts cc, cs;
    mat_mul(a, b, MulBackend::classical(), cc);
    mat_mul(a, b, MulBackend::strassen(8), cs);
    CHECK(cc == cs);
}

TEST_CASE("strassen multiplication tally drops below classical") {
    std::mt19937_64 rng(13);
    Matrix<Int> a = random_matrix(16, 16, rng);
    Matrix<Int> b = random_matrix(16, 16, rng);
    OpCounts cc, cs;
    mat_mul(a, b, MulBackend::classical(), cc);
    mat_mul(a, b, MulBackend::strassen(1), cs);
    CHECK(cc.mm_muls == 16 * 16 * 16);
    CHECK(cs.mm_muls == 7 * 7 * 7 * 7);  // four halvings, 7 products each
    CHECK(cs.mm_muls < cc.mm_muls);
    CHECK(cs.adds > cc.adds);  // the price: extra block additions
}

TEST_CASE("scalar kernels") {
    Matrix<Int> a{{Int(2), Int(-4)}, {Int(6), Int(0)}};
    OpCounts ctx;

    CHECK(mat_scale(Int(3), a, ctx) ==
          Matrix<Int>{{Int(6), Int(-12)}, {Int(18), Int(0)}});
    CHECK(ctx.muls == 4);
    CHECK(ctx.mm_muls == 0);  // scalar products are not matrix products

    CHECK(mat_sub(a, a, ctx) == Matrix<Int>(2, 2));
    CHECK(ctx.adds == 4);
    CHECK_THROWS_AS(mat_sub(a, Matrix<Int>(1, 2), ctx), DimensionMismatch);

    CHECK(mat_div_scalar(a, Int(2), ctx) ==
          Matrix<Int>{{Int(1), Int(-2)}, {Int(3), Int(0)}});
    CHECK(ctx.divs == 4);
    CHECK(ctx.unit_divs == 0);
    mat_div_scalar(a, Int(1), ctx);
    CHECK(ctx.divs == 4);
    CHECK(ctx.unit_divs == 4);
    CHECK_THROWS_AS(mat_div_scalar(a, Int(4), ctx), InexactDivision);
}

TEST_CASE("polynomial matrices use the same kernels") {
    Matrix<Poly> a{{Poly{0, 1}, Poly{1}}, {Poly{-1}, Poly{0, 0, 1}}};
    OpCounts ctx;
    const Matrix<Poly> sq = mat_mul(a, a, MulBackend::classical(), ctx);
    // (t)(t) + (1)(-1) = t^2 - 1
    CHECK(sq(0, 0) == Poly({-1, 0, 1}));
    CHECK(ctx.muls == 8);  // one count per ring op, whatever the degree

    OpCounts cs;
    CHECK(mat_mul(a, a, MulBackend::strassen(1), cs) == sq);
}
