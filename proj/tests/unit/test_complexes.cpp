#include <gtest/gtest.h>

#include "gchar/complexes.hpp"
#include "gchar/error.hpp"
#include "gchar/parse.hpp"
#include "oracles.hpp"

using namespace gchar;

namespace {

GradedRing ring(const std::string& body) { return parse_ring("field 13\n" + body); }

std::vector<Polynomial> vars(const GradedRing& r) {
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < r.nvars(); ++i) v.push_back(r.var(i));
  return v;
}

ChainMap identity_map(const ChainComplex& c) {
  ChainMap f{c, c, {}};
  for (int n : c.indices())
    f.components[n] = PolyMatrix::identity(c.slot(n).num_generators(), c.ring().nvars(), c.ring().field());
  return f;
}

}  // namespace

TEST(Koszul, RanksAreBinomialAndSquareIsZero) {
  GradedRing r = ring("var x 1\nvar y 1\nvar z 1\nvar w 1");
  ChainComplex k = koszul(r, vars(r));
  EXPECT_TRUE(k.is_valid());
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(static_cast<long long>(k.slot(n).num_generators()), oracle::binom(4, n));
}

TEST(Koszul, ResolvesResidueFieldOverPolynomialRing) {
  GradedRing r = ring("var x 1\nvar y 1\nvar z 1");
  ChainComplex k = koszul(r, vars(r));
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(is_zero(homology(k, n))) << n;
  GradedModule h0 = homology(k, 0);
  EXPECT_EQ(length(h0).length, 1);
}

TEST(Koszul, DetectsZeroDivisor) {
  GradedRing r = ring("var x 1\nvar y 1\nrel x^2");
  EXPECT_FALSE(is_zero(homology(koszul(r, {r.var(0)}), 1)));
  EXPECT_TRUE(is_zero(homology(koszul(r, {r.var(1)}), 1)));
}

TEST(Cone, IdentityConeIsAcyclicAndZeroMapConeIsNot) {
  GradedRing r = ring("var x 1\nvar y 1");
  ChainComplex k = koszul(r, vars(r));
  ChainComplex c = cone(identity_map(k));
  EXPECT_TRUE(c.is_valid());
  EXPECT_TRUE(is_exact(c));
  ChainMap zero{k, k, {}};
  ChainComplex z = cone(zero);
  EXPECT_FALSE(is_exact(z));
}

TEST(Cone, RejectsNonChainMaps) {
  GradedRing r = ring("var x 1\nvar y 1");
  ChainComplex k = koszul(r, {r.var(0)});
  ChainMap f{k, k, {}};
  f.components[0] = PolyMatrix::identity(1, 2, r.field());
  EXPECT_FALSE(is_chain_map(f));
  EXPECT_THROW(cone(f), InputError);
}

TEST(Tensor, KoszulTensorKoszulIsKoszul) {
  GradedRing r = ring("var x 1\nvar y 1");
  ChainComplex t = tensor(koszul(r, {r.var(0)}), koszul(r, {r.var(1)}));
  EXPECT_TRUE(t.is_valid());
  EXPECT_TRUE(is_zero(homology(t, 1)));
  EXPECT_TRUE(is_zero(homology(t, 2)));
  EXPECT_EQ(length(homology(t, 0)).length, 1);
}

TEST(Complex, ValidateCatchesNonzeroSquare) {
  GradedRing r = ring("var x 1\nvar y 1");
  ChainComplex c(r);
  GradedModule R = ring_module(r);
  c.set_slot(2, twist(R, -2));
  c.set_slot(1, twist(R, -1));
  c.set_slot(0, R);
  PolyMatrix a(1, 1, 2, r.field());
  a(0, 0) = r.var(0);
  c.set_differential(2, a);
  c.set_differential(1, a);
  EXPECT_FALSE(c.is_valid());
  EXPECT_THROW(c.validate(), ConsistencyError);
  PolyMatrix wrong(2, 1, 2, r.field());
  EXPECT_THROW(c.set_differential(1, wrong), InputError);
}

TEST(Complex, ShiftNegatesAndMovesSlots) {
  GradedRing r = ring("var x 1\nvar y 1");
  ChainComplex k = koszul(r, vars(r));
  ChainComplex s = shift(k);
  EXPECT_TRUE(s.is_valid());
  EXPECT_EQ(s.min_index(), k.min_index() + 1);
  EXPECT_EQ(s.slot(3).num_generators(), k.slot(2).num_generators());
}

TEST(Complex, AlternatingSumOnFiniteLengthComplex) {
  GradedRing r = ring("var x 1\nvar y 1\nrel x^2");
  GradedModule q = cyclic_quotient(r, power_of_maximal_ideal(r, 2));
  ChainComplex t = tensor(koszul(r, vars(r)), q);
  AlternatingSums s = alternating_sum(t);
  EXPECT_EQ(s.slots, 3 - 2 * 3 + 3);
  EXPECT_EQ(s.slots, s.homology);
  EXPECT_THROW(alternating_sum(koszul(r, vars(r))), PreconditionError);
}

TEST(Complex, DualOfKoszulIsKoszul) {
  GradedRing r = ring("var x 1\nvar y 1\nvar z 1");
  ChainComplex k = koszul(r, vars(r));
  ChainComplex d = dualize(k);
  EXPECT_TRUE(d.is_valid());
  for (int n = 0; n <= 2; ++n) EXPECT_TRUE(is_zero(homology(d, n + 1))) << n;
  EXPECT_EQ(length(homology(d, 0)).length, 1);
}

TEST(Complex, TruncationsAndAugmentation) {
  GradedRing r = ring("var x 1\nvar y 1");
  ChainComplex k = koszul(r, vars(r));
  ChainComplex h = hard_truncation(k, 1);
  EXPECT_EQ(h.min_index(), 1);
  EXPECT_EQ(h.max_index(), 2);
  ChainComplex s = soft_truncation(k, 1);
  EXPECT_TRUE(s.is_valid());
  EXPECT_EQ(s.slot(1).num_generators(), 2u);
  PolyMatrix aug(1, 1, 2, r.field());
  aug(0, 0) = r.one();
  ChainComplex a = augment(k, residue_field(r), aug);
  EXPECT_TRUE(a.is_valid());
  EXPECT_TRUE(is_exact(a));
}
