#include "oracles.hpp"
#include "properties.hpp"

#include "taut/linear.hpp"

#include <gtest/gtest.h>

using namespace taut;

TEST(Rational, ParsesAndPrintsCanonically)
{
    EXPECT_EQ(parse_rational("3/6"), make_rational(1, 2));
    EXPECT_EQ(parse_rational("-4"), Rational(-4));
    EXPECT_EQ(to_string(make_rational(-6, 4)), "-3/2");
    EXPECT_EQ(binomial(5, 2), 10);
    EXPECT_EQ(binomial(3, 5), 0);
}

TEST(BareissOracle, KnownRanks)
{
    using oracle::DenseMatrix;
    EXPECT_EQ(oracle::bareiss_rank(DenseMatrix{{1, 0}, {0, 1}}), 2u);
    EXPECT_EQ(oracle::bareiss_rank(DenseMatrix{{0, 0}, {0, 0}}), 0u);
    EXPECT_EQ(oracle::bareiss_rank(DenseMatrix{{1, 2, 3}, {2, 4, 6}, {make_rational(1, 2), 1, make_rational(3, 2)}}), 1u);
    EXPECT_EQ(oracle::bareiss_rank(DenseMatrix{{0, 1, 2}, {0, 2, 5}, {0, 0, 0}}), 2u);
}

TEST(LinearAlgebra, AgreesWithDenseEliminationOnRandomMatrices)
{
    const props::Outcome r = props::linear_oracle(250, 7);
    EXPECT_GE(r.instances, 200u);
    EXPECT_TRUE(r.ok) << r.detail;
}

TEST(Echelon, ExpressAndReduce)
{
    Echelon e(3, true);
    EXPECT_TRUE(e.insert({{0, 1}, {1, 1}}, 10));
    EXPECT_TRUE(e.insert({{1, 1}, {2, 1}}, 11));
    EXPECT_FALSE(e.insert({{0, 1}, {2, -1}}, 12));
    EXPECT_EQ(e.rank(), 2u);
    auto combo = e.express({{0, 2}, {1, 3}, {2, 1}});
    ASSERT_TRUE(combo);
    EXPECT_EQ(*combo, (SparseVec{{10, 2}, {11, 1}}));
    EXPECT_FALSE(e.contains({{2, 1}}));
    EXPECT_FALSE(e.express({{2, 1}}).has_value());
    EXPECT_TRUE(e.reduce({{0, 1}, {1, 1}}).empty());
}

TEST(LinearAlgebra, KernelOfImagesIsDeterministic)
{
    // images e0, e1, e0 + e1: the third is dependent on the first two
    const auto k = kernel_of_images({{{0, 1}}, {{1, 1}}, {{0, 1}, {1, 1}}}, 2);
    ASSERT_EQ(k.size(), 1u);
    EXPECT_EQ(k[0], (SparseVec{{0, -1}, {1, -1}, {2, 1}}));
}

TEST(LinearAlgebra, QuotientRepresentativesComplementTheSubspace)
{
    const auto reps = quotient_representatives(3, {{1, 1, 0}});
    ASSERT_EQ(reps.size(), 2u);
    oracle::DenseMatrix all{{1, 1, 0}};
    for (const auto& r : reps)
        all.push_back(r);
    EXPECT_EQ(oracle::bareiss_rank(all), 3u);
}

TEST(LinearAlgebra, InconsistentSystemHasNoSolution)
{
    SparseMatrix m = SparseMatrix::from_dense({{1, 1}, {2, 2}}, 2);
    EXPECT_FALSE(solve(m, {1, 3}).has_value());
    auto x = solve(m, {1, 2});
    ASSERT_TRUE(x);
    EXPECT_EQ(m.apply(*x), (Vector{1, 2}));
}
