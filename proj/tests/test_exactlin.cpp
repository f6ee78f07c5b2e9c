#include "nilpo/exactlin.hpp"
#include "nilpo/constructors.hpp"
#include "nilpo/exterior.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace nilpo;

namespace {

SparseMatrix dense(std::vector<std::vector<long long>> rows)
{
    std::vector<std::vector<Rational>> d;
    for (const auto& r : rows) {
        std::vector<Rational> x;
        for (auto v : r)
            x.emplace_back(v);
        d.push_back(std::move(x));
    }
    return SparseMatrix::from_dense(d);
}

SparseMatrix random_matrix(oracle::Lcg& g, std::size_t rows, std::size_t cols, int density)
{
    SparseMatrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (g.range(0, 99) < density)
                m.set(r, c, Rational(static_cast<long long>(g.range(-3, 3)), static_cast<long long>(g.range(1, 2))));
    return m;
}

oracle::Dense to_oracle(const SparseMatrix& m)
{
    oracle::Dense d(m.rows(), std::vector<oracle::Q>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& t : m.row(r))
            d[r][t.index] = t.value.to_mpq();
    return d;
}

SubspaceBasis random_subspace(oracle::Lcg& g, std::size_t n, std::size_t gens)
{
    return rref(random_matrix(g, gens, n, 40));
}

} // namespace

TEST(Rational, CanonicalForm)
{
    EXPECT_EQ(Rational(2, 4).to_string(), "1/2");
    EXPECT_EQ(Rational(-3, -6).to_string(), "1/2");
    EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
    EXPECT_EQ(Rational(0, 5).to_string(), "0");
    EXPECT_EQ(Rational::parse("10/4"), Rational(5, 2));
    EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
    EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}

TEST(Rational, OverflowFallsBackToBigIntegers)
{
    Rational big(std::numeric_limits<long long>::max());
    Rational sq = big * big;
    mpq_class expect = mpq_class(big.to_mpq() * big.to_mpq());
    EXPECT_EQ(sq.to_mpq(), expect);
    EXPECT_EQ(sq / big, big);
    EXPECT_EQ((sq - sq).to_string(), "0");
    Rational tiny(1, std::numeric_limits<long long>::max());
    EXPECT_EQ((tiny * tiny * big * big).to_string(), "1");
}

TEST(Rational, AgreesWithGmpOnRandomExpressions)
{
    oracle::Lcg g(7);
    for (int trial = 0; trial < 2000; ++trial) {
        long long a = g.range(-1000000000, 1000000000), b = g.range(1, 1000000000);
        long long c = g.range(-1000000000, 1000000000), d = g.range(1, 1000000000);
        Rational x(a, b), y(c, d);
        mpq_class qx(static_cast<long>(a), static_cast<long>(b)), qy(static_cast<long>(c), static_cast<long>(d));
        qx.canonicalize();
        qy.canonicalize();
        EXPECT_EQ((x + y).to_mpq(), mpq_class(qx + qy));
        EXPECT_EQ((x - y).to_mpq(), mpq_class(qx - qy));
        EXPECT_EQ((x * y * x * y).to_mpq(), mpq_class(qx * qy * qx * qy));
        if (c != 0) {
            EXPECT_EQ((x / y).to_mpq(), mpq_class(qx / qy));
        }
        EXPECT_EQ(x < y, qx < qy);
    }
}

TEST(Rref, Examples)
{
    EXPECT_EQ(rref(SparseMatrix::identity(3)).dim(), 3u);
    auto z = rref(SparseMatrix(2, 5));
    EXPECT_EQ(z.dim(), 0u);
    EXPECT_EQ(z.ambient_dim(), 5u);
    auto r = rref(dense({{1, 2, 0}, {2, 4, 0}, {0, 1, 0}}));
    EXPECT_EQ(r.dim(), 2u);
    EXPECT_EQ(r.pivots(), (std::vector<std::size_t>{0, 1}));
}

TEST(Rref, CanonicalAndIdempotent)
{
    oracle::Lcg g(11);
    for (int trial = 0; trial < 50; ++trial) {
        SparseMatrix m = random_matrix(g, 6, 7, 35);
        SubspaceBasis r = rref(m);
        EXPECT_EQ(rref(r.as_matrix()), r);
        // Same row space in another order and with a redundant row gives the same output.
        std::vector<SparseVector> rows(m.row_data().rbegin(), m.row_data().rend());
        rows.push_back(vec::add(m.row(0), m.row(1)));
        EXPECT_EQ(span(7, rows), r);
        for (std::size_t k = 0; k < r.dim(); ++k) {
            EXPECT_TRUE(r.vectors()[k].front().value.is_one());
            if (k > 0) {
                EXPECT_LT(r.pivots()[k - 1], r.pivots()[k]);
            }
            for (std::size_t other = 0; other < r.dim(); ++other) {
                if (other != k) {
                    EXPECT_TRUE(vec::coefficient(r.vectors()[other], r.pivots()[k]).is_zero());
                }
            }
        }
    }
}

TEST(Rank, AgreesWithDenseOracle)
{
    oracle::Lcg g(3);
    for (int trial = 0; trial < 100; ++trial) {
        auto rows = static_cast<std::size_t>(g.range(1, 9)), cols = static_cast<std::size_t>(g.range(1, 9));
        SparseMatrix m = random_matrix(g, rows, cols, static_cast<int>(g.range(10, 70)));
        EXPECT_EQ(rank(m), oracle::rank(to_oracle(m)));
        EXPECT_EQ(rank(m) + kernel_basis(m).dim(), cols);
        SubspaceBasis k = kernel_basis(m);
        for (const auto& v : k.vectors())
            EXPECT_TRUE(m.apply(v).empty());
    }
}

TEST(Rank, SmallCases)
{
    EXPECT_EQ(rank(SparseMatrix::identity(5)), 5u);
    EXPECT_EQ(rank(SparseMatrix(4, 3)), 0u);
    EXPECT_EQ(kernel_basis(SparseMatrix::identity(4)).dim(), 0u);
    EXPECT_EQ(kernel_basis(SparseMatrix(3, 4)).dim(), 4u);
}

TEST(Rank, HeisenbergDifferentials)
{
    LieAlgebra h = heisenberg(3);
    EXPECT_EQ(rank(differential_matrix(h, 1)), 1u);
    EXPECT_EQ(kernel_basis(differential_matrix(h, 2)).dim(), 3u);
}

TEST(ColumnRankProfile, FirstIndependentColumns)
{
    auto m = dense({{0, 1, 2, 0}, {0, 2, 4, 1}});
    EXPECT_EQ(column_rank_profile(m), (std::vector<std::size_t>{1, 3}));
}

TEST(Subspaces, SumIntersectQuotient)
{
    SubspaceBasis e1 = SubspaceBasis::coordinate(2, {0}), e2 = SubspaceBasis::coordinate(2, {1});
    EXPECT_EQ(subspace_sum(e1, e2).dim(), 2u);
    EXPECT_EQ(subspace_intersect(e1, e2).dim(), 0u);
    EXPECT_EQ(subspace_sum(e1, e1), e1);
    EXPECT_EQ(subspace_intersect(e1, e1), e1);
    EXPECT_EQ(quotient_dim(e1, e1), 0u);
    EXPECT_THROW(quotient_dim(e1, e2), NotASubspace);
    EXPECT_THROW(subspace_sum(e1, SubspaceBasis::full(3)), DimensionMismatch);
}

TEST(Subspaces, GrassmannIdentityAgainstEnumeration)
{
    oracle::Lcg g(5);
    for (int trial = 0; trial < 200; ++trial) {
        SubspaceBasis u = random_subspace(g, 4, static_cast<std::size_t>(g.range(0, 4)));
        SubspaceBasis v = random_subspace(g, 4, static_cast<std::size_t>(g.range(0, 4)));
        SubspaceBasis s = subspace_sum(u, v), i = subspace_intersect(u, v);
        EXPECT_EQ(s.dim() + i.dim(), u.dim() + v.dim());
        EXPECT_TRUE(u.contains(i));
        EXPECT_TRUE(v.contains(i));
        EXPECT_TRUE(s.contains(u));
        EXPECT_TRUE(s.contains(v));
        // Independent count: dim(U∩V) from the null space of [U; -V] (dense oracle).
        oracle::Dense cols(4, std::vector<oracle::Q>(u.dim() + v.dim(), 0));
        for (std::size_t a = 0; a < u.dim(); ++a)
            for (const auto& t : u.vectors()[a])
                cols[t.index][a] = t.value.to_mpq();
        for (std::size_t b = 0; b < v.dim(); ++b)
            for (const auto& t : v.vectors()[b])
                cols[t.index][u.dim() + b] = -t.value.to_mpq();
        std::size_t null = u.dim() + v.dim() - (u.dim() + v.dim() == 0 ? 0 : oracle::rank(cols));
        EXPECT_EQ(i.dim(), null);
    }
}

TEST(Preimage, RestrictedToTarget)
{
    // m: Q^3 -> Q^2, (x,y,z) -> (x+y, z)
    auto m = dense({{1, 1, 0}, {0, 0, 1}});
    SubspaceBasis target = SubspaceBasis::coordinate(2, {0});
    auto pre = restricted_preimage(m, SubspaceBasis::full(3), target);
    EXPECT_EQ(pre.dim(), 2u);
    EXPECT_TRUE(pre.contains(vec::unit(0)));
    EXPECT_FALSE(pre.contains(vec::unit(2)));
    EXPECT_EQ(restricted_kernel(m, SubspaceBasis::full(3)).dim(), 1u);
    EXPECT_EQ(image(m, pre), target);
}

TEST(Determinant, InverseAndSolve)
{
    oracle::Lcg g(9);
    for (int trial = 0; trial < 60; ++trial) {
        auto n = static_cast<std::size_t>(g.range(1, 6));
        SparseMatrix m = random_matrix(g, n, n, 60);
        Rational d = determinant(m);
        EXPECT_EQ(d.to_mpq(), oracle::det(to_oracle(m)));
        auto inv = inverse(m);
        EXPECT_EQ(inv.has_value(), !d.is_zero());
        if (inv) {
            EXPECT_EQ(*inv * m, SparseMatrix::identity(n));
        }
        SparseVector b = m.apply(vec::from_pairs({{0, Rational(1)}, {n - 1, Rational(2)}}));
        auto x = solve(m, b);
        ASSERT_TRUE(x.has_value());
        EXPECT_EQ(m.apply(*x), b);
    }
    EXPECT_FALSE(solve(dense({{1, 0}, {1, 0}}), vec::from_pairs({{0, Rational(1)}, {1, Rational(2)}})).has_value());
}
