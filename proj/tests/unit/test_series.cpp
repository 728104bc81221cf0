#include <gtest/gtest.h>

#include "gchar/error.hpp"
#include "gchar/series.hpp"
#include "oracles.hpp"

using namespace gchar;

TEST(TruncatedSeries, ArithmeticAgainstBinomials) {
  TruncatedSeries a = TruncatedSeries::binomial_power(1, 1, 7, 20);
  for (int n = 0; n <= 7; ++n) EXPECT_EQ(a[n], oracle::binom(7, n));
  EXPECT_EQ(a[8], 0);
  TruncatedSeries b = TruncatedSeries::binomial_power(1, 1, 5, 20);
  TruncatedSeries p = a * b;
  for (int n = 0; n <= 12; ++n) EXPECT_EQ(p[n], oracle::binom(12, n));
  EXPECT_EQ(p / b, a);
  EXPECT_EQ((a + b) - b, a);
}

TEST(TruncatedSeries, DivisionNeedsUnitConstantTerm) {
  TruncatedSeries two = TruncatedSeries::one(4) + TruncatedSeries::one(4);
  EXPECT_THROW(TruncatedSeries::one(4) / two, InputError);
  EXPECT_THROW(TruncatedSeries(-1), InputError);
}

TEST(PoincareSeries, MatchesDirectExpansion) {
  for (int e = 0; e <= 6; ++e)
    for (int c = 0; c <= e; ++c) {
      TruncatedSeries p = poincare_series({e, c}, 15);
      for (int n = 0; n <= 15; ++n) {
        long long s = 0;
        for (int j = 0; 2 * j <= n; ++j)
          s += oracle::binom(e, n - 2 * j) * (c == 0 ? (j == 0) : oracle::binom(c - 1 + j, j));
        EXPECT_EQ(p[n], s) << e << "," << c << "," << n;
      }
    }
  EXPECT_THROW(poincare_series({2, 3}), InputError);
}

TEST(GBettiOfK, ShapeAndClosedForms) {
  EXPECT_EQ(g_betti_of_k({1, 1}), (std::vector<BigInt>{1}));
  EXPECT_EQ(g_betti_of_k({2, 1}), (std::vector<BigInt>{1, 0}));
  EXPECT_EQ(g_betti_of_k({3, 1}), (std::vector<BigInt>{1, 0, 1}));
  EXPECT_THROW(g_betti_of_k({3, 0}), PreconditionError);
  for (int c = 1; c <= 2; ++c)
    for (int d = 1; d <= 30; ++d) {
      auto cf = chi_g_of_k_closed_form({d + c, c});
      ASSERT_TRUE(cf.has_value());
      EXPECT_EQ(chi_g_of_k({d + c, c}), *cf);
    }
  EXPECT_FALSE(chi_g_of_k_closed_form({3, 3}).has_value());
  EXPECT_FALSE(chi_g_of_k_closed_form({5, 3}).has_value());
}

TEST(GBettiOfK, ValuesBeyondSixtyFourBits) {
  BigInt v = chi_g_of_k({81, 1});
  EXPECT_EQ(v, BigInt(1) << 79);
  EXPECT_GT(v, BigInt(std::numeric_limits<long long>::max()));
}

TEST(GBettiOfK, ShiftedSums) {
  CIShape s{6, 2};
  auto b = g_betti_of_k(s);
  for (int i = 0; i + 1 < static_cast<int>(b.size()); ++i)
    EXPECT_EQ(chi_g_of_k(s, i) + chi_g_of_k(s, i + 1), b[static_cast<std::size_t>(i)]);
}

TEST(Binomial, PascalTwoStepIdentity) {
  for (int a = 2; a <= 30; ++a)
    for (int b = 0; b <= a; ++b) EXPECT_TRUE(binomial_identity_check(a, b));
  EXPECT_EQ(binomial(60, 30), BigInt("118264581564861424"));
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_THROW(binomial_identity_check(1, 0), InputError);
}
