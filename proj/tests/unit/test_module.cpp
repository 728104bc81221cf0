#include <gtest/gtest.h>

#include "gchar/error.hpp"
#include "gchar/module.hpp"
#include "gchar/parse.hpp"
#include "oracles.hpp"

using namespace gchar;

namespace {

GradedRing x2() { return parse_ring("field 13\nvar x 1\nvar y 1\nrel x^2"); }
GradedRing plane() { return parse_ring("field 13\nvar x 1\nvar y 1"); }

long long total_length(const GradedModule& m) {
  LengthResult l = length(m);
  EXPECT_TRUE(l.finite);
  return l.length;
}

PolyMatrix scalar(const GradedRing& r, const Polynomial& p) {
  PolyMatrix a(1, 1, r.nvars(), r.field());
  a(0, 0) = p;
  return a;
}

}  // namespace

TEST(GradedModule, ResidueFieldAndMaximalIdeal) {
  GradedRing r = x2();
  GradedModule k = residue_field(r), m = maximal_ideal(r), R = ring_module(r);
  EXPECT_EQ(k.dim(0), 1u);
  for (int d = 1; d < 6; ++d) EXPECT_EQ(k.dim(d), 0u);
  EXPECT_EQ(m.dim(0), 0u);
  for (int d = 1; d < 8; ++d) EXPECT_EQ(m.dim(d), r.dim(d));
  EXPECT_EQ(beta0(m), 2u);
  EXPECT_EQ(R.dim(3), 2u);
  EXPECT_FALSE(is_zero(k));
  EXPECT_TRUE(is_zero(GradedModule::zero(r)));
}

TEST(GradedModule, LengthOfTruncationsMatchesHilbertFunction) {
  GradedRing r = x2();
  for (int t = 1; t <= 5; ++t) {
    long long expect = 0;
    for (int d = 0; d < t; ++d) expect += static_cast<long long>(r.dim(d));
    EXPECT_EQ(total_length(cyclic_quotient(r, power_of_maximal_ideal(r, t))), expect);
  }
  EXPECT_FALSE(length(ring_module(r)).finite);
}

TEST(GradedModule, UnitRelationsArePrunedAway) {
  GradedRing r = plane();
  PolyMatrix rel(2, 1, 2, r.field());
  rel(0, 0) = r.one();
  rel(1, 0) = r.var(0);
  GradedModule m(r, {0, -1}, rel);  // e0 = -x e1, so M = R(1)
  EXPECT_EQ(beta0(m), 1u);
  GradedModule p = minimal_presentation(m);
  EXPECT_EQ(p.num_generators(), 1u);
  EXPECT_TRUE(p.has_free_presentation());
  for (int d = -1; d < 4; ++d) EXPECT_EQ(m.dim(d), p.dim(d));
}

TEST(GradedModule, TwistShiftsDimensions) {
  GradedRing r = x2();
  GradedModule m = maximal_ideal(r);
  GradedModule t = twist(m, 2);
  for (int d = 0; d < 6; ++d) EXPECT_EQ(t.dim(d - 2), m.dim(d));
}

TEST(GradedModule, DirectSumAndTensor) {
  GradedRing r = plane();
  GradedModule a = cyclic_quotient(r, {r.var(0)}), b = cyclic_quotient(r, {r.var(1)});
  GradedModule s = direct_sum(a, b);
  for (int d = 0; d < 5; ++d) EXPECT_EQ(s.dim(d), a.dim(d) + b.dim(d));
  EXPECT_EQ(total_length(tensor(a, b)), 1);
  EXPECT_EQ(total_length(tensor(residue_field(r), residue_field(r))), 1);
}

TEST(GradedModule, KernelOfMultiplication) {
  GradedRing r = x2();
  GradedModule R = ring_module(r);
  // ker(x : R(-1) -> R) = x R(-1)
  Generators g = kernel(R, {1}, scalar(r, r.var(0)));
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g.degrees[0], 2);
  EXPECT_TRUE(kernel(R, {1}, scalar(r, r.var(1))).size() == 0);
}

TEST(GradedModule, InjectiveAndSurjectiveMaps) {
  GradedRing r = x2();
  GradedModule R = ring_module(r), k = residue_field(r);
  ModuleMap onto{R, k, scalar(r, r.one())};
  EXPECT_TRUE(is_well_defined(onto));
  EXPECT_TRUE(is_surjective(onto));
  EXPECT_FALSE(is_injective(onto));
  ModuleMap by_y{twist(R, -1), R, scalar(r, r.var(1))};
  EXPECT_TRUE(is_injective(by_y));
  ModuleMap by_x{twist(R, -1), R, scalar(r, r.var(0))};
  EXPECT_FALSE(is_injective(by_x));
  EXPECT_EQ(beta0(cokernel_module(by_x)), 1u);
  ModuleMap bad{k, R, scalar(r, r.one())};
  EXPECT_FALSE(is_well_defined(bad));
}

TEST(GradedModule, HomOfFreeAndDuals) {
  GradedRing r = x2();
  GradedModule R = ring_module(r), k = residue_field(r), m = maximal_ideal(r);
  HomResult h = hom(direct_sum(R, twist(R, 1)), k);
  EXPECT_EQ(total_length(h.module), 2);
  EXPECT_TRUE(is_zero(dual(k).module));  // depth R = 1
  EXPECT_EQ(beta0(dual(m).module), 2u);
  GradedRing a = parse_ring("field 13\nvar x 1\nrel x^2");
  EXPECT_EQ(total_length(dual(residue_field(a)).module), 1);  // socle
}

TEST(GradedModule, SubmoduleMembership) {
  GradedRing r = plane();
  GradedModule R = ring_module(r);
  PolyMatrix cols(1, 2, 2, r.field());
  cols(0, 0) = r.var(0);
  cols(0, 1) = r.var(1);
  Generators m{cols, {1, 1}};
  Column xy{r.var(0) * r.var(1)};
  Column one{r.one()};
  EXPECT_TRUE(in_submodule(R, m, xy, 2));
  EXPECT_FALSE(in_submodule(R, m, one, 0));
  auto c = express(R, m, xy, 2);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(minimal_subset(R, Generators{PolyMatrix::hstack(cols, scalar(r, r.var(0) + r.var(1))), {1, 1, 1}}).size(), 2u);
}

TEST(GradedModule, RejectsInhomogeneousPresentations) {
  GradedRing r = plane();
  PolyMatrix rel(1, 1, 2, r.field());
  rel(0, 0) = r.var(0) + r.var(0) * r.var(1);
  EXPECT_THROW(GradedModule(r, {0}, rel), InputError);
}

TEST(GradedModule, KernelSearchReportsTruncation) {
  GradedRing r = x2();
  try {
    kernel(ring_module(r), {1}, scalar(r, r.var(0)), 0);
    FAIL() << "expected a truncation error";
  } catch (const TruncationError& e) {
    EXPECT_GE(e.first_uncertified(), 1);
  }
}
