#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <vector>

#include "pistar/exactalg.hpp"

using namespace pistar;

namespace {

const Field F;

Mat product(const Mat& a, const Mat& b) { return mul(F, a, b); }

// Determinant by cofactor expansion; independent of row reduction.
elem_t det(const Mat& a) {
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    if (n == 1) return a(0, 0);
    elem_t s = 0;
    for (std::size_t j = 0; j < n; ++j) {
        Mat minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = a(r, c);
        elem_t term = F.mul(a(0, j), det(minor));
        s = j % 2 ? F.sub(s, term) : F.add(s, term);
    }
    return s;
}

// Largest k with a nonzero k x k minor.
std::size_t rank_by_minors(const Mat& a) {
    const std::size_t m = a.rows(), n = a.cols();
    for (std::size_t k = std::min(m, n); k > 0; --k) {
        std::vector<bool> rs(m, false), cs(n, false);
        std::fill(rs.begin(), rs.begin() + k, true);
        do {
            std::fill(cs.begin(), cs.end(), false);
            std::fill(cs.begin(), cs.begin() + k, true);
            do {
                Mat sub(k, k);
                for (std::size_t r = 0, rr = 0; r < m; ++r) {
                    if (!rs[r]) continue;
                    for (std::size_t c = 0, cc = 0; c < n; ++c)
                        if (cs[c]) sub(rr, cc++) = a(r, c);
                    ++rr;
                }
                if (det(sub) != 0) return k;
            } while (std::prev_permutation(cs.begin(), cs.end()));
        } while (std::prev_permutation(rs.begin(), rs.end()));
    }
    return 0;
}

} // namespace

TEST(Field, RejectsNonPrimesAndLargeModuli) {
    EXPECT_THROW(Field(15), InvalidArgument);
    EXPECT_THROW(Field(2), InvalidArgument);
    EXPECT_THROW(Field(4294967311ULL), InvalidArgument);
    EXPECT_NO_THROW(Field(101));
}

TEST(Field, InverseAndNegation) {
    for (elem_t a : std::vector<elem_t>{1, 2, 12345, kDefaultPrime - 1}) {
        EXPECT_EQ(F.mul(a, F.inv(a)), 1u);
        EXPECT_EQ(F.add(a, F.neg(a)), 0u);
    }
    EXPECT_THROW(F.inv(0), InvalidArgument);
    EXPECT_EQ(F.from_int(-1), kDefaultPrime - 1);
}

TEST(Rank, Examples) {
    EXPECT_EQ(rank(F, Mat(0, 0)), 0u);
    EXPECT_EQ(rank(F, Mat::identity(3)), 3u);
    EXPECT_EQ(rank(F, Mat::from_rows(F, {{1, 2}, {2, 4}})), 1u);
}

TEST(Rank, AgreesWithMinorsOnLowRankProducts) {
    FieldCtx ctx(F, 11);
    std::mt19937 pick(5);
    for (int t = 0; t < 60; ++t) {
        std::size_t m = 1 + pick() % 4, n = 1 + pick() % 4, r = pick() % 4;
        Mat a = product(random_mat(m, r, ctx), random_mat(r, n, ctx));
        EXPECT_EQ(rank(F, a), rank_by_minors(a));
        EXPECT_EQ(rank(F, a), rank(F, a.transpose()));
    }
}

TEST(Rank, SmallFieldRankDeficiencyIsCommon) {
    Field small(3);
    FieldCtx ctx(small, 3);
    int deficient = 0;
    for (int t = 0; t < 40; ++t) {
        Mat a = random_mat(3, 3, ctx);
        EXPECT_EQ(rank(small, a), rank(small, a.transpose()));
        EXPECT_EQ(rank(small, a) + kernel_basis(small, a).cols(), 3u);
        deficient += rank(small, a) < 3;
    }
    EXPECT_GT(deficient, 0);
}

TEST(KernelBasis, Examples) {
    EXPECT_EQ(kernel_basis(F, Mat::identity(3)).cols(), 0u);
    EXPECT_EQ(kernel_basis(F, Mat(2, 3)).cols(), 3u);
    Mat a = Mat::from_rows(F, {{1, 1}});
    Mat k = kernel_basis(F, a);
    ASSERT_EQ(k.cols(), 1u);
    EXPECT_TRUE(product(a, k).is_zero());
    // proportional to (1, p-1)
    EXPECT_EQ(F.mul(k(0, 0), F.inv(k(1, 0))), kDefaultPrime - 1);
}

TEST(KernelBasis, RankNullityAndIndependence) {
    FieldCtx ctx(F, 21);
    std::mt19937 pick(9);
    for (int t = 0; t < 50; ++t) {
        std::size_t m = pick() % 6, n = pick() % 6, r = pick() % 4;
        Mat a = product(random_mat(m, r, ctx), random_mat(r, n, ctx));
        Mat k = kernel_basis(F, a);
        EXPECT_EQ(rank(F, a) + k.cols(), n);
        EXPECT_TRUE(product(a, k).is_zero());
        EXPECT_EQ(rank(F, k), k.cols());
    }
}

TEST(SolveAffine, Examples) {
    std::vector<elem_t> b{5, 7, 9};
    auto s = solve_affine(F, Mat::identity(3), b);
    ASSERT_TRUE(s);
    EXPECT_EQ(s->particular, b);
    EXPECT_EQ(s->kernel.cols(), 0u);

    std::vector<elem_t> zero(2, 0);
    auto z = solve_affine(F, Mat(2, 3), zero);
    ASSERT_TRUE(z);
    EXPECT_EQ(z->particular, std::vector<elem_t>(3, 0));
    EXPECT_EQ(z->kernel.cols(), 3u);

    std::vector<elem_t> one{1};
    auto o = solve_affine(F, Mat::from_rows(F, {{1, 1}}), one);
    ASSERT_TRUE(o);
    EXPECT_EQ(o->particular, (std::vector<elem_t>{1, 0}));
    EXPECT_EQ(o->kernel.cols(), 1u);
}

TEST(SolveAffine, InconsistentAndShapeErrors) {
    std::vector<elem_t> b{1, 3};
    EXPECT_FALSE(solve_affine(F, Mat::from_rows(F, {{1, 1}, {2, 2}}), b));
    std::vector<elem_t> wrong{1};
    EXPECT_THROW(solve_affine(F, Mat(2, 2), wrong), InvalidArgument);
}

TEST(SolveAffine, RandomConsistentSystems) {
    FieldCtx ctx(F, 77);
    for (int t = 0; t < 30; ++t) {
        Mat a = product(random_mat(4, 2, ctx), random_mat(2, 5, ctx));
        Mat x = random_mat(5, 1, ctx);
        std::vector<elem_t> b = product(a, x).column(0);
        auto s = solve_affine(F, a, b);
        ASSERT_TRUE(s);
        Mat got = Mat::from_columns(5, {s->particular});
        EXPECT_EQ(product(a, got).column(0), b);
        EXPECT_EQ(s->kernel.cols(), 3u);
    }
}

TEST(SolveUnique, FullColumnRankOnly) {
    Mat a = Mat::from_rows(F, {{1, 0}, {0, 1}, {1, 1}});
    Mat x = Mat::from_rows(F, {{3}, {4}});
    EXPECT_EQ(solve_unique(F, a, product(a, x)), x);
    EXPECT_THROW(solve_unique(F, Mat::from_rows(F, {{1, 1}}), Mat::from_rows(F, {{1}})), InternalAssertion);
    EXPECT_THROW(solve_unique(F, a, Mat::from_rows(F, {{1}, {0}, {0}})), InternalAssertion);
}

TEST(RandomMat, EmptyAndReproducible) {
    FieldCtx ctx(F, 1);
    Mat e = random_mat(0, 4, ctx);
    EXPECT_EQ(e.rows(), 0u);
    EXPECT_EQ(e.cols(), 4u);
    FieldCtx a(F, 42), b(F, 42), c(F, 43);
    Mat ma = random_mat(2, 2, a), mb = random_mat(2, 2, b), mc = random_mat(2, 2, c);
    EXPECT_EQ(ma, mb);
    EXPECT_NE(ma, mc);
    for (auto v : ma.values()) EXPECT_LT(v, kDefaultPrime);
}

TEST(RandomMat, SquareMatricesAreInvertible) {
    int deficient = 0;
    for (int t = 0; t < 100; ++t) {
        FieldCtx ctx = FieldCtx::derived(F, 2024, std::uint64_t(t));
        std::size_t n = 1 + std::size_t(t % 6);
        deficient += rank(F, random_mat(n, n, ctx)) != n;
    }
    EXPECT_LE(deficient, 1);
}

TEST(TrialConfig, ContextsDependOnTrialAndSalt) {
    TrialConfig cfg{5, 7};
    FieldCtx a = cfg.context(F, 0), b = cfg.context(F, 0), c = cfg.context(F, 1), d = cfg.context(F, 0, 9);
    elem_t va = a.random_element();
    EXPECT_EQ(va, b.random_element());
    EXPECT_NE(va, c.random_element());
    EXPECT_NE(va, d.random_element());
}

TEST(Mat, BlocksAndConcatenation) {
    Mat a = Mat::from_rows(F, {{1, 2}, {3, 4}});
    Mat d = block_diagonal({a, Mat::identity(1)});
    EXPECT_EQ(d.rows(), 3u);
    EXPECT_EQ(d.block(0, 0, 2, 2), a);
    EXPECT_EQ(d(2, 2), 1u);
    EXPECT_EQ(d(0, 2), 0u);
    Mat h = hcat(a, Mat::identity(2));
    EXPECT_EQ(h.cols(), 4u);
    EXPECT_EQ(h.block(0, 2, 2, 2), Mat::identity(2));
    EXPECT_THROW(hcat(a, Mat(3, 1)), InvalidArgument);
}
