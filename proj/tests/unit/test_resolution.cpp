#include <gtest/gtest.h>

#include "gchar/catalog.hpp"
#include "gchar/error.hpp"
#include "gchar/parse.hpp"
#include "gchar/resolution.hpp"
#include "oracles.hpp"

using namespace gchar;

namespace {

GradedRing ring(const std::string& body) { return parse_ring("field 13\n" + body); }

Polynomial poly(const GradedRing& r, const std::string& s) { return parse_polynomial(s, r.names(), r.field()); }

// Coefficient of t^n in (1+t)^e / (1-t^2)^c.
long long poincare_oracle(int e, int c, int n) {
  long long s = 0;
  for (int j = 0; 2 * j <= n; ++j) s += oracle::binom(e, n - 2 * j) * (c == 0 ? (j == 0) : oracle::binom(c - 1 + j, j));
  return s;
}

}  // namespace

TEST(Resolution, ResidueFieldOverPolynomialRing) {
  GradedRing r = ring("var x 1\nvar y 1\nvar z 1");
  Resolution res = minimal_resolution(residue_field(r));
  EXPECT_TRUE(res.terminated());
  EXPECT_EQ(res.betti(3), (std::vector<long long>{1, 3, 3, 1}));
  EXPECT_EQ(res.beta(4), 0);
  BettiTable t = res.table();
  EXPECT_EQ(t.at(2, 2), 3);
  EXPECT_EQ(t.at(2, 3), 0);
  EXPECT_TRUE(res.is_minimal());
  PdimVerdict p = pdim(res);
  ASSERT_TRUE(p.finite());
  EXPECT_EQ(p.value, 3);
}

TEST(Resolution, ResidueFieldBettiNumbersMatchPoincareSeries) {
  struct Case { std::string body; int e, c; };
  for (const auto& cs : std::vector<Case>{{"var x 1\nrel x^2", 1, 1},
                                          {"var x 1\nvar y 1\nrel x^2", 2, 1},
                                          {"var x 1\nvar y 1\nrel x*y", 2, 1},
                                          {"var x 1\nvar y 1\nrel x^2\nrel y^2", 2, 2},
                                          {"var x 1\nvar y 1\nvar z 1\nrel x*y-z^2", 3, 1}}) {
    GradedRing r = ring(cs.body);
    Resolution res = minimal_resolution(residue_field(r), 5);
    for (int n = 0; n <= 5; ++n) EXPECT_EQ(res.beta(n), poincare_oracle(cs.e, cs.c, n)) << cs.body << " n=" << n;
    EXPECT_FALSE(pdim(res).finite());
  }
}

TEST(Resolution, EulerCharacteristicOfGradedBettiTableMatchesHilbertFunction) {
  GradedRing r = ring("var x 1\nvar y 1\nvar z 1");
  std::vector<std::vector<std::string>> ideals{{"x^2", "x*y", "z^3"}, {"x*y", "y*z", "x*z"}, {"x^2+y^2", "z^2"},
                                               {"x^3", "y^2*z", "x*y*z"}};
  for (const auto& gens : ideals) {
    std::vector<Polynomial> ideal;
    for (const auto& g : gens) ideal.push_back(poly(r, g));
    GradedModule m = cyclic_quotient(r, ideal);
    Resolution res = minimal_resolution(m, 4);
    ASSERT_TRUE(res.terminated());
    BettiTable t = res.table();
    const int top = 12;
    for (int d = 0; d <= top; ++d) {
      // coefficient of t^d in H_M(t) (1-t)^3
      long long lhs = 0;
      for (int j = 0; j <= 3 && j <= d; ++j)
        lhs += (j % 2 ? -1 : 1) * oracle::binom(3, j) * static_cast<long long>(m.dim(d - j));
      long long rhs = 0;
      for (int n = 0; n <= 3; ++n) rhs += (n % 2 ? -1 : 1) * t.at(n, d);
      EXPECT_EQ(lhs, rhs) << gens[0] << " d=" << d;
    }
  }
}

TEST(Resolution, SyzygiesOfResidueField) {
  GradedRing r = ring("var x 1\nvar y 1\nrel x^2");
  Resolution res = minimal_resolution(residue_field(r), 3);
  GradedModule s1 = res.syzygy(1);
  GradedModule m = maximal_ideal(r);
  for (int d = 0; d < 6; ++d) EXPECT_EQ(s1.dim(d), m.dim(d));
  ChainComplex c = res.complex(3);
  EXPECT_TRUE(c.is_valid());
  for (int n = 1; n < 3; ++n) EXPECT_TRUE(is_zero(homology(c, n)));
}

TEST(Resolution, DepthAndPdim) {
  GradedRing r = ring("var x 1\nvar y 1\nrel x^2");
  EXPECT_EQ(depth(ring_module(r)), 1);
  EXPECT_EQ(depth(residue_field(r)), 0);
  EXPECT_EQ(depth(maximal_ideal(r)), 1);
  GradedModule q = cyclic_quotient(r, {r.var(1)});
  PdimVerdict p = pdim(q);
  ASSERT_TRUE(p.finite());
  EXPECT_EQ(p.value, 1);
  EXPECT_EQ(chi_classical(q), 0);
  EXPECT_EQ(chi_classical(ring_module(r)), 1);
  EXPECT_FALSE(pdim(residue_field(r)).finite());
}

TEST(Resolution, AuslanderBuchsbaumOnPolynomialRing) {
  GradedRing r = ring("var x 1\nvar y 1\nvar z 1");
  for (const auto& ideal : std::vector<std::vector<Polynomial>>{{r.var(0)}, {r.var(0), r.var(1)}, {r.var(0) * r.var(1)}}) {
    GradedModule m = cyclic_quotient(r, ideal);
    EXPECT_EQ(pdim(m).value + depth(m), 3);
  }
}

TEST(Resolution, ExtAgainstRing) {
  GradedRing r = ring("var x 1\nvar y 1\nrel x^2");
  Resolution k = minimal_resolution(residue_field(r), 3);
  EXPECT_FALSE(ext_against_ring_vanishes(k, 1));
  Resolution m = minimal_resolution(maximal_ideal(r), 3);
  EXPECT_TRUE(ext_against_ring_vanishes(m, 1));
  EXPECT_TRUE(ext_against_ring_vanishes(m, 2));
}

TEST(Resolution, RankViaEulerCharacteristicAndComponents) {
  GradedRing r = ring("var x 1\nvar y 1");
  RankResult a = rank(direct_sum(ring_module(r), maximal_ideal(r)));
  ASSERT_TRUE(a.value.has_value());
  EXPECT_EQ(*a.value, 2);
  EXPECT_EQ(*rank(residue_field(r)).value, 0);

  CatalogEntry xy = build("xy");
  RankResult u = rank(xy.module("R_x"));
  EXPECT_FALSE(u.value.has_value());
  EXPECT_EQ(u.method, "components");
  RankResult m = rank(maximal_ideal(xy.ring));
  ASSERT_TRUE(m.value.has_value());
  EXPECT_EQ(*m.value, 1);

  GradedRing bare = ring("var x 1\nvar y 1\nrel x*y");
  EXPECT_THROW(rank(cyclic_quotient(bare, {bare.var(0)})), UnsupportedError);
}

TEST(Resolution, FreeRankSplitsOffFreeSummands) {
  GradedRing r = ring("var x 1\nvar y 1\nrel x^2");
  GradedModule R = ring_module(r);
  GradedModule m = direct_sum(direct_sum(R, twist(R, -2)), residue_field(r));
  FreeSummand f = f_rank(m);
  EXPECT_EQ(f.f_rank, 2u);
  EXPECT_EQ(beta0(f.complement), 1u);
  EXPECT_EQ(f_rank(maximal_ideal(r)).f_rank, 0u);
}
