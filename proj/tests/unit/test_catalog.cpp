#include <gtest/gtest.h>

#include "gchar/catalog.hpp"
#include "gchar/error.hpp"

using namespace gchar;

TEST(Catalog, EveryEntryBuildsAndAdvertisedFlagsHold) {
  for (const auto& info : catalog_list()) {
    CatalogEntry e = build(info.name);
    EXPECT_EQ(e.name, info.name);
    for (const auto& m : e.modules) {
      EXPECT_FALSE(is_zero(m.module)) << info.name << "/" << m.name;
      if (!e.ring.is_regular())
        EXPECT_EQ(is_totally_reflexive(m.module), m.totally_reflexive) << info.name << "/" << m.name;
    }
    for (const auto& f : e.factorizations) {
      EXPECT_TRUE(f.mf.is_valid()) << info.name << "/" << f.name;
      EXPECT_TRUE(is_totally_reflexive(mf_cokernel(e.ring, f.mf))) << info.name << "/" << f.name;
    }
  }
}

TEST(Catalog, RejectsUnknownNamesAndParameters) {
  EXPECT_THROW(build("nope"), InputError);
  EXPECT_THROW(build("regular2", {{"d", "2"}}), InputError);
  EXPECT_THROW(build("x0x1", {{"d", "two"}}), InputError);
  EXPECT_THROW(build("x0x1", {{"d", "9"}}), InputError);
  EXPECT_THROW(build("An-odd", {{"n", "4"}}), InputError);
  EXPECT_THROW(build("An-odd", {}, 7), InputError);
  EXPECT_THROW(build("hypersurface-dim1", {{"f", "x"}}), InputError);
}

TEST(Catalog, SquareRootOfMinusOne) {
  auto i = sqrt_minus_one(PrimeField(13));
  ASSERT_TRUE(i.has_value());
  EXPECT_EQ(PrimeField(13).mul(*i, *i), 12u);
  EXPECT_FALSE(sqrt_minus_one(PrimeField(7)).has_value());
  EXPECT_TRUE(sqrt_minus_one(PrimeField(2)).has_value());
}

TEST(Catalog, EntryLookupByRing) {
  for (const std::string name : {"cusp", "quadric3", "ci-3-2"}) {
    auto e = catalog_entry_for(build(name).ring);
    ASSERT_TRUE(e.has_value()) << name;
    EXPECT_EQ(e->name, name);
  }
  auto a5 = catalog_entry_for(build("An-odd", {{"n", "5"}}).ring);
  ASSERT_TRUE(a5.has_value());
  EXPECT_TRUE(a5->classification_complete);
  GradedRing plain = attach_catalog_components(build("xy").ring.with_components({}));
  EXPECT_EQ(plain.components().size(), 2u);
}

TEST(Catalog, ParametrizedComponentsLieOnTheRing) {
  for (const auto& info : catalog_list()) {
    CatalogEntry e = build(info.name);
    for (const auto& c : e.ring.components())
      for (const auto& f : e.ring.relations()) EXPECT_TRUE(f.substitute(c.parametrization).is_zero()) << info.name;
  }
}

TEST(Catalog, SamplesAreDeterministic) {
  CatalogEntry e = build("hypersurface-dim1");
  auto a = sample_modules(e, 15, 11), b = sample_modules(e, 15, 11);
  ASSERT_EQ(a.size(), 15u);
  ASSERT_EQ(b.size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].name, b[i].name);
    EXPECT_EQ(a[i].module.relations(), b[i].module.relations());
  }
}

TEST(Catalog, InferredRowDegreesMakeMatrixHomogeneous) {
  CatalogEntry e = build("quadric-4var");
  const auto& mf = e.factorizations.front().mf;
  auto rows = infer_row_degrees(mf.phi, e.ring.weights());
  EXPECT_EQ(*std::min_element(rows.begin(), rows.end()), 0);
}
