#include <random>

#include <gtest/gtest.h>

#include "gchar/extension_field.hpp"

using namespace gchar;

TEST(ExtensionField, ModulusIsIrreducibleAndOrderIsPk) {
  for (unsigned k : {1u, 2u, 3u, 4u}) {
    ExtensionField f(PrimeField(13), k);
    EXPECT_TRUE(is_irreducible(f.modulus(), f.base()));
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) q *= 13;
    EXPECT_EQ(f.order(), q);
  }
  // z^2 + 1 splits mod 13, z^2 + 2 does not.
  EXPECT_FALSE(is_irreducible({1, 0, 1}, PrimeField(13)));
  EXPECT_TRUE(is_irreducible({2, 0, 1}, PrimeField(13)));
}

TEST(ExtensionField, FieldAxiomsOnRandomElements) {
  ExtensionField f(PrimeField(13), 4);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 200; ++t) {
    auto a = f.random(rng), b = f.random(rng), c = f.random(rng);
    EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
    EXPECT_EQ(f.mul(a, b), f.mul(b, a));
    EXPECT_EQ(f.sub(f.add(a, b), b), a);
    if (!f.is_zero(a)) EXPECT_EQ(f.mul(a, f.inv(a)), f.one());
  }
}

TEST(ExtensionField, FrobeniusHasOrderK) {
  ExtensionField f(PrimeField(5), 3);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    auto a = f.random(rng);
    EXPECT_EQ(f.pow(a, f.order()), a);
  }
}

TEST(ExtensionField, RankOfEmbeddedMatrixMatchesBaseRank) {
  ExtensionField f(PrimeField(13), 2);
  std::vector<std::vector<ExtensionField::Elem>> rows{{f.embed(1), f.embed(2)}, {f.embed(2), f.embed(4)}};
  EXPECT_EQ(rank(f, rows), 1u);
  rows[1][1] = f.embed(5);
  EXPECT_EQ(rank(f, rows), 2u);
}
