#include <gtest/gtest.h>

#include "gchar/catalog.hpp"
#include "gchar/error.hpp"
#include "gchar/gdimension.hpp"
#include "gchar/parse.hpp"

using namespace gchar;

namespace {

GradedRing ring(const std::string& body) { return parse_ring("field 13\n" + body); }

}  // namespace

TEST(TotalReflexivity, ModulesOverOneDimensionalHypersurface) {
  GradedRing r = ring("var x 1\nvar y 1\nrel x^2");
  EXPECT_TRUE(is_totally_reflexive(ring_module(r)));
  EXPECT_TRUE(is_totally_reflexive(maximal_ideal(r)));
  EXPECT_TRUE(is_totally_reflexive(cyclic_quotient(r, {r.var(0)})));
  ReflexivityCertificate c = total_reflexivity(residue_field(r));
  EXPECT_FALSE(c.totally_reflexive);
  EXPECT_EQ(gdim(residue_field(r)), 1);
  EXPECT_EQ(gdim(maximal_ideal(r)), 0);
}

TEST(GDimension, AuslanderBridgerFormula) {
  CatalogEntry e = build("hypersurface-dim1");
  for (const auto& c : sample_modules(e, 12, 7)) {
    EXPECT_EQ(gdim(c.module), e.ring.krull_dim() - depth(c.module)) << c.name;
  }
}

TEST(GApproximation, ResidueFieldInDimensionOne) {
  GradedRing r = ring("var x 1\nvar y 1\nrel x^2");
  GApproximation a = g_approximation(residue_field(r));
  EXPECT_NO_THROW(certify(a));
  EXPECT_TRUE(is_totally_reflexive(a.g));
  EXPECT_TRUE(pdim(a.k).finite());
  GBetti b = g_betti(a);
  EXPECT_EQ(b.values, (std::vector<long long>{1, 0}));
  EXPECT_EQ(chi_g(residue_field(r)), 1);
}

TEST(GApproximation, GBettiIdentitiesOnSamples) {
  CatalogEntry e = build("quadric3");
  for (const auto& c : sample_modules(e, 8, 3)) {
    GApproximation a = g_approximation(c.module);
    certify(a);
    GBetti b = g_betti(a);
    EXPECT_EQ(static_cast<int>(b.values.size()), a.gdim + 1) << c.name;
    EXPECT_EQ(b.at(0), static_cast<long long>(beta0(c.module))) << c.name;
    EXPECT_EQ(b.chi(), chi_g(c.module)) << c.name;
    StrictResolution s = strict_resolution(a);
    EXPECT_TRUE(is_exact(s.augmented())) << c.name;
    EXPECT_EQ(alternating_beta0(s.complex), b.chi()) << c.name;
  }
}

TEST(GApproximation, TotallyReflexiveModulesAreTheirOwnApproximation) {
  CatalogEntry e = build("An-odd", {{"n", "3"}});
  for (const auto& f : e.factorizations) {
    GradedModule m = mf_cokernel(e.ring, f.mf);
    EXPECT_TRUE(is_totally_reflexive(m)) << f.name;
    EXPECT_EQ(gdim(m), 0);
    EXPECT_EQ(chi_g(m), static_cast<long long>(beta0(m))) << f.name;
  }
}

TEST(GApproximation, RegularRingReducesToClassicalInvariants) {
  GradedRing r = ring("var x 1\nvar y 1");
  GradedModule q = cyclic_quotient(r, {r.var(0) * r.var(1)});
  EXPECT_EQ(gdim(residue_field(r)), 2);
  EXPECT_EQ(gdim(q), 1);
  EXPECT_EQ(chi_g(q), chi_classical(q));
  EXPECT_EQ(chi_g(residue_field(r)), chi_classical(residue_field(r)));
}

TEST(MatrixFactorizations, ValidityAndReducedness) {
  CatalogEntry cusp = build("cusp");
  for (const auto& f : cusp.factorizations) {
    EXPECT_TRUE(f.mf.is_valid()) << f.name;
    EXPECT_TRUE(f.mf.is_reduced()) << f.name;
    ChainComplex w = complete_resolution_window(cusp.ring, f.mf);
    EXPECT_TRUE(w.is_valid());
    EXPECT_TRUE(is_zero(homology(w, 1)));
    EXPECT_TRUE(is_zero(homology(w, 0)));
  }
  MatrixFactorization bad = cusp.factorizations.front().mf;
  bad.psi(0, 0) = bad.psi(0, 0) + bad.psi(0, 0);
  EXPECT_FALSE(bad.is_valid());
  EXPECT_THROW(mf_cokernel(cusp.ring, bad), InputError);
}

TEST(RegularQuotient, ChiDropsByFreeRank) {
  CatalogEntry e = build("hypersurface-dim1");
  const Polynomial y = e.ring.var(1);
  for (const std::string name : {"m", "R", "m2"}) {
    GradedModule m = name == "R" ? ring_module(e.ring) : e.module(name);
    RegularQuotientReport q = quotient_by_regular(m, y);
    EXPECT_TRUE(q.holds) << name;
    EXPECT_EQ(q.chi_g_quotient_cone, q.chi_g_m - q.f_rank) << name;
    EXPECT_EQ(q.chi_g_quotient_engine, q.chi_g_quotient_cone) << name;
  }
  EXPECT_FALSE(is_regular_on(e.module("m"), e.ring.var(0)));
}

TEST(BaseChange, GBettiNumbersSurviveRegularQuotient) {
  GradedRing r = ring("var x 1\nvar y 1\nvar z 1\nrel x^2");
  EXPECT_THROW(base_change_betti(residue_field(r), r.var(2)), PreconditionError);
  GradedModule m = cyclic_quotient(r, {r.var(1)});
  BaseChangeReport c = base_change_betti(m, r.var(2));
  EXPECT_TRUE(c.equal);
  EXPECT_EQ(c.over_r.values, c.over_quotient.values);
}

TEST(Properness, ApproximationIsProperButMaximalIdealSequenceIsNot) {
  GradedRing r = ring("var x 1\nvar y 1\nrel x^2");
  StrictResolution s = strict_resolution(residue_field(r));
  PropernessReport good = properness_test(s.augmented(), {maximal_ideal(r), ring_module(r)});
  EXPECT_EQ(good.verdict, Properness::proper_relative_to_witnesses);
  EXPECT_EQ(good.chi_g, 1);
  EXPECT_THROW(properness_test(s.augmented(), {residue_field(r)}), InputError);

  ChainComplex c(r);
  c.set_slot(1, maximal_ideal(r));
  c.set_slot(0, ring_module(r));
  c.set_slot(-1, residue_field(r));
  PolyMatrix inc(1, 2, 2, r.field());
  inc(0, 0) = r.var(0);
  inc(0, 1) = r.var(1);
  c.set_differential(1, inc);
  c.set_differential(0, PolyMatrix::identity(1, 2, r.field()));
  ASSERT_TRUE(is_exact(c));
  PropernessReport bad = properness_test(c, {maximal_ideal(r)});
  EXPECT_EQ(bad.verdict, Properness::not_proper);
  EXPECT_EQ(bad.alternating_sum, -1);
}

TEST(TorG, PairingWithFiniteLengthModule) {
  GradedRing r = ring("var x 1\nvar y 1\nrel x^2");
  GradedModule k = residue_field(r);
  TorG t = tor_g(maximal_ideal(r), k);
  ASSERT_FALSE(t.lengths.empty());
  EXPECT_EQ(t.lengths[0], 2);
  EXPECT_EQ(chi_g_pair(ring_module(r), k), 1);
}

TEST(EpsilonTau, CuspFamily) {
  CatalogEntry e = build("cusp");
  EpsilonTau z = epsilon_tau(e.candidates(), 0);
  ASSERT_TRUE(z.epsilon && z.tau);
  EXPECT_EQ(*z.epsilon, 2);
  EXPECT_EQ(*z.tau, 1);
}
