#include <gtest/gtest.h>

#include <random>

#include "fieldwork/exactcore.hpp"
#include "oracles.hpp"

namespace fw = fieldwork;
using fw::Matrix;
using fw::Rational;
using fw::Vector;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi, int zero_bias) {
  std::uniform_int_distribution<int> entry(lo, hi);
  std::uniform_int_distribution<int> coin(0, 9);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      if (coin(rng) >= zero_bias) m(i, j) = Rational(entry(rng), 1 + coin(rng) % 3);
    }
  }
  return m;
}

}  // namespace

TEST(Rational, CanonicalFormAndSerialization) {
  EXPECT_EQ(Rational::parse("6/4").str(), "3/2");
  EXPECT_EQ(Rational::parse("-3/6").str(), "-1/2");
  EXPECT_EQ(Rational::parse("4/2").str(), "2");
  EXPECT_EQ(Rational::parse("0/7").str(), "0");
  EXPECT_EQ(Rational::parse("+5").str(), "5");
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_TRUE(Rational::parse("4/2").is_integer());
}

TEST(Rational, RejectsMalformedText) {
  EXPECT_THROW(Rational::parse("1/0"), fw::ParseError);
  EXPECT_THROW(Rational::parse(""), fw::ParseError);
  EXPECT_THROW(Rational::parse("1.5"), fw::ParseError);
  EXPECT_THROW(Rational::parse("-"), fw::ParseError);
  EXPECT_THROW(Rational::parse("1/-2"), fw::ParseError);
  EXPECT_THROW(Rational(1) / Rational(0), fw::ValidationError);
}

TEST(Rational, ArithmeticIsExact) {
  const Rational third(1, 3);
  EXPECT_EQ(third + third + third, Rational(1));
  EXPECT_EQ(Rational(2, 3) * Rational(3, 4), Rational(1, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(-Rational(1, 2), Rational(-1, 2));
}

TEST(RankAndKernel, IdentityHasFullRankAndNoKernel) {
  const auto rk = fw::rank_and_kernel(Matrix::identity(2));
  EXPECT_EQ(rk.rank, 2u);
  EXPECT_TRUE(rk.kernel_basis.empty());
}

TEST(RankAndKernel, ZeroOneByOne) {
  const auto rk = fw::rank_and_kernel(Matrix(1, 1));
  EXPECT_EQ(rk.rank, 0u);
  ASSERT_EQ(rk.kernel_basis.size(), 1u);
  EXPECT_EQ(rk.kernel_basis[0], (Vector{1}));
}

TEST(RankAndKernel, RankOneTwoByTwo) {
  const Matrix m = Matrix::from_rows({{1, 2}, {2, 4}});
  const auto rk = fw::rank_and_kernel(m);
  EXPECT_EQ(rk.rank, 1u);
  ASSERT_EQ(rk.kernel_basis.size(), 1u);
  EXPECT_EQ(rk.kernel_basis[0], (Vector{-2, 1}));
}

// rank + nullity = cols, kernel vectors annihilated exactly, kernel basis
// independent, rank agrees with the Bareiss oracle.
TEST(RankAndKernel, PropertiesOnRandomMatrices) {
  std::mt19937 rng(20261015);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
    const Matrix m = random_matrix(rng, r, c, -3, 3, 4 + static_cast<int>(rng() % 5));
    const auto rk = fw::rank_and_kernel(m);
    EXPECT_EQ(rk.rank + rk.kernel_basis.size(), c);
    EXPECT_EQ(rk.rank, oracle::rank(m));
    EXPECT_EQ(fw::rank(m), rk.rank);
    for (const auto& v : rk.kernel_basis) EXPECT_TRUE(fw::is_zero(m.apply(v)));
    if (!rk.kernel_basis.empty()) {
      EXPECT_EQ(oracle::rank(Matrix::from_columns(rk.kernel_basis, c)), rk.kernel_basis.size());
    }
  }
}

TEST(Linalg, InverseAndSolve) {
  const Matrix m = Matrix::from_rows({{2, 1}, {1, 1}});
  const auto inv = fw::inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(m * *inv, Matrix::identity(2));
  EXPECT_FALSE(fw::inverse(Matrix::from_rows({{1, 2}, {2, 4}})).has_value());

  const auto x = fw::solve(m, Vector{3, 2});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(m.apply(*x), (Vector{3, 2}));
  EXPECT_FALSE(fw::solve(Matrix::from_rows({{1, 1}, {1, 1}}), Vector{1, 2}).has_value());
}

TEST(Linalg, ComplementOfColumnSpace) {
  const Matrix m = Matrix::from_rows({{1}, {1}, {0}});
  const auto comp = fw::complement_of_column_space(m);
  EXPECT_EQ(comp, (std::vector<std::size_t>{0, 2}));
}

TEST(Matrix, KroneckerAndSwap) {
  const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
  const Matrix b = Matrix::from_rows({{0, 1}, {1, 0}});
  const Matrix k = fw::kron(a, b);
  EXPECT_EQ(k(0, 1), Rational(1));
  EXPECT_EQ(k(3, 2), Rational(4));
  // swap (a kron b) swap = b kron a
  const Matrix s = fw::swap_factors(2, 2);
  EXPECT_EQ(s * k * s, fw::kron(b, a));
}

TEST(HomologyDims, SingleGroup) {
  EXPECT_EQ(fw::homology_dims(fw::ChainComplex(1)), (std::vector<std::size_t>{1}));
}

TEST(HomologyDims, AcyclicIdentity) {
  const fw::ChainComplex c({1, 1}, {Matrix::identity(1)});
  EXPECT_EQ(fw::homology_dims(c), (std::vector<std::size_t>{0, 0}));
}

// Simplicial chains of the triangle boundary: vertices 0,1,2, edges
// [0,1], [1,2], [0,2], with d[a,b] = b - a.
TEST(HomologyDims, CycleGraphIsACircle) {
  const Matrix d = Matrix::from_rows({{-1, 0, -1}, {1, -1, 0}, {0, 1, 1}});
  EXPECT_EQ(oracle::rank(d), 2u);
  const fw::ChainComplex c({3, 3}, {d});
  EXPECT_EQ(fw::homology_dims(c), (std::vector<std::size_t>{1, 1}));
}

TEST(ChainComplex, RejectsNonzeroSquare) {
  const Matrix d1 = Matrix::identity(1);
  const Matrix d2 = Matrix::identity(1);
  EXPECT_THROW(fw::ChainComplex({1, 1, 1}, {d1, d2}), fw::InternalError);
}

TEST(ChainComplex, RejectsShapeMismatch) {
  EXPECT_THROW(fw::ChainComplex({2, 1}, {Matrix::identity(1)}), fw::ValidationError);
  EXPECT_THROW(fw::ChainComplex({2, 1}, {}), fw::ValidationError);
}

TEST(Permutation, GroupLaws) {
  const auto s3 = fw::symmetric_group(3);
  ASSERT_EQ(s3.size(), 6u);
  for (const auto& a : s3) {
    EXPECT_TRUE((a * a.inverse()).is_identity());
    for (const auto& b : s3) {
      for (const auto& c : s3) EXPECT_EQ((a * b) * c, a * (b * c));
    }
  }
  EXPECT_THROW(fw::Permutation({0, 0}), fw::ValidationError);
}

TEST(GroupCoinvariants, TrivialGroup) {
  const fw::GroupAction a({fw::Permutation::identity(1)}, 2, [](const fw::Permutation&) { return Matrix::identity(2); });
  EXPECT_EQ(fw::group_coinvariants(a), 2u);
}

TEST(GroupCoinvariants, SwapOfCoordinates) {
  const fw::GroupAction a(fw::symmetric_group(2), 2, [](const fw::Permutation& g) { return fw::permutation_matrix(g); });
  EXPECT_TRUE(a.is_homomorphism());
  EXPECT_EQ(fw::group_coinvariants(a), 1u);
}

TEST(GroupCoinvariants, SignCharacter) {
  const fw::GroupAction a(fw::symmetric_group(2), 1, [](const fw::Permutation& g) {
    Matrix m(1, 1);
    m(0, 0) = g.is_identity() ? 1 : -1;
    return m;
  });
  EXPECT_TRUE(a.is_homomorphism());
  EXPECT_EQ(fw::group_coinvariants(a), 0u);
}

TEST(GroupCoinvariants, EmptyGroupRejected) {
  EXPECT_THROW(fw::GroupAction({}, 1, [](const fw::Permutation&) { return Matrix::identity(1); }),
               fw::ValidationError);
}

TEST(GroupCoinvariants, TrivialActionGivesFullDimension) {
  for (std::size_t dim = 1; dim <= 5; ++dim) {
    const fw::GroupAction a(fw::symmetric_group(3), dim, [dim](const fw::Permutation&) { return Matrix::identity(dim); });
    EXPECT_EQ(fw::group_coinvariants(a), dim);
  }
}

// Regular representation of S_3: coinvariants are one-dimensional, and the
// averaging matrix is idempotent.
TEST(GroupCoinvariants, RegularRepresentation) {
  const auto s3 = fw::symmetric_group(3);
  const fw::GroupAction a(s3, 6, [&s3](const fw::Permutation& g) {
    Matrix m(6, 6);
    for (std::size_t i = 0; i < 6; ++i) {
      const auto target = std::find(s3.begin(), s3.end(), g * s3[i]) - s3.begin();
      m(static_cast<std::size_t>(target), i) = 1;
    }
    return m;
  });
  EXPECT_TRUE(a.is_homomorphism());
  const Matrix p = fw::averaging_projector(a);
  EXPECT_EQ(p * p, p);
  EXPECT_EQ(fw::group_coinvariants(a), 1u);
}
