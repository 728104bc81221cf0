#include <random>

#include <gtest/gtest.h>

#include "gchar/error.hpp"
#include "gchar/linalg.hpp"
#include "oracles.hpp"

using namespace gchar;

namespace {

Matrix random_matrix(std::size_t r, std::size_t c, const PrimeField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<Scalar> d(0, f.prime() - 1);
  Matrix a(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = d(rng);
  return a;
}

Matrix low_rank(std::size_t r, std::size_t c, std::size_t k, const PrimeField& f, std::mt19937_64& rng) {
  if (k == 0) return Matrix(r, c, f);
  return random_matrix(r, k, f, rng) * random_matrix(k, c, f, rng);
}

}  // namespace

TEST(PrimeField, RejectsNonPrimes) {
  EXPECT_THROW(PrimeField(12), InputError);
  EXPECT_THROW(PrimeField(1), InputError);
  EXPECT_THROW(PrimeField(65537), InputError);
  EXPECT_NO_THROW(PrimeField(65521));
}

TEST(PrimeField, InversesAndSignedRepresentatives) {
  PrimeField f(13);
  for (Scalar a = 1; a < 13; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_THROW(f.inv(0), Error);
  EXPECT_EQ(f.to_signed(12), -1);
  EXPECT_EQ(f.to_signed(6), 6);
  EXPECT_EQ(f.from_int(-1), 12u);
  EXPECT_EQ(f.pow(5, 2), 12u);  // 5^2 = -1 mod 13
}

TEST(Linalg, IdentityAndZeroRanks) {
  PrimeField f(13);
  EXPECT_EQ(rank(Matrix::identity(5, f)), 5u);
  EXPECT_EQ(rank(Matrix(4, 7, f)), 0u);
  EXPECT_EQ(kernel_basis(Matrix(3, 4, f)).cols(), 4u);
}

TEST(Linalg, RankMatchesMinorExpansion) {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {2u, 3u, 13u}) {
    PrimeField f(p);
    for (int trial = 0; trial < 150; ++trial) {
      const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6, k = rng() % (std::min(r, c) + 1);
      Matrix a = trial % 2 ? low_rank(r, c, k, f, rng) : random_matrix(r, c, f, rng);
      EXPECT_EQ(rank(a), oracle::rank_by_minors(a)) << "p=" << p << " trial " << trial;
    }
  }
}

TEST(Linalg, RankNullityAndKernel) {
  std::mt19937_64 rng(3);
  PrimeField f(13);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + rng() % 10, c = 1 + rng() % 10, k = rng() % (std::min(r, c) + 1);
    Matrix a = low_rank(r, c, k, f, rng);
    Matrix ker = kernel_basis(a);
    EXPECT_EQ(rank(a) + ker.cols(), c);
    EXPECT_EQ(rank(ker), ker.cols());
    if (ker.cols()) EXPECT_TRUE((a * ker).is_zero());
    EXPECT_EQ(rank(a), rank(a.transpose()));
  }
}

TEST(Linalg, RrefIsReducedEchelon) {
  std::mt19937_64 rng(5);
  PrimeField f(7);
  for (int trial = 0; trial < 100; ++trial) {
    Matrix a = random_matrix(1 + rng() % 6, 1 + rng() % 6, f, rng);
    Echelon e = rref(a);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      EXPECT_EQ(e.reduced(i, e.pivots[i]), 1u);
      for (std::size_t j = 0; j < e.reduced.rows(); ++j)
        if (j != i) EXPECT_EQ(e.reduced(j, e.pivots[i]), 0u);
      if (i) EXPECT_LT(e.pivots[i - 1], e.pivots[i]);
    }
    for (std::size_t i = e.pivots.size(); i < e.reduced.rows(); ++i)
      for (std::size_t j = 0; j < e.reduced.cols(); ++j) EXPECT_EQ(e.reduced(i, j), 0u);
  }
}

TEST(Linalg, SolveFindsSolutionsExactlyWhenConsistent) {
  std::mt19937_64 rng(9);
  PrimeField f(13);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    Matrix a = low_rank(r, c, rng() % (std::min(r, c) + 1), f, rng);
    Matrix x0 = random_matrix(c, 1, f, rng);
    std::vector<Scalar> b = (a * x0).column(0);
    auto x = solve(a, b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(a * std::span<const Scalar>(*x), b);
    Matrix aug = a;
    Matrix rb = random_matrix(r, 1, f, rng);
    aug.append_column(rb.column(0));
    EXPECT_EQ(solve(a, rb.column(0)).has_value(), rank(aug) == rank(a));
  }
  EXPECT_THROW(solve(Matrix(2, 2, f), std::vector<Scalar>{1}), InputError);
}

TEST(Reducer, TracksSpanAndQuotient) {
  PrimeField f(5);
  Reducer red(3, f);
  EXPECT_TRUE(red.add({1, 2, 0}));
  EXPECT_FALSE(red.add({2, 4, 0}));
  EXPECT_TRUE(red.contains(std::vector<Scalar>{3, 1, 0}));
  EXPECT_FALSE(red.contains(std::vector<Scalar>{3, 2, 0}));
  EXPECT_TRUE(red.add({0, 0, 1}));
  EXPECT_EQ(red.rank(), 2u);
  EXPECT_EQ(red.free_positions().size(), 1u);
  EXPECT_EQ(red.quotient_coordinates(std::vector<Scalar>{1, 2, 3}), std::vector<Scalar>{0});
}
