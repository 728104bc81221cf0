#include <gtest/gtest.h>

#include "gchar/error.hpp"
#include "gchar/parse.hpp"
#include "gchar/ring.hpp"
#include "oracles.hpp"

using namespace gchar;

namespace {

// dim of (k[x]/(f_1..f_c))_d for a regular sequence, by inclusion-exclusion.
long long ci_dim(const std::vector<int>& w, const std::vector<int>& e, int d) {
  long long total = 0;
  for (unsigned mask = 0; mask < (1u << e.size()); ++mask) {
    int shift = 0, sign = 1;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (mask >> j & 1u) {
        shift += e[j];
        sign = -sign;
      }
    total += sign * oracle::count_monomials(w, d - shift);
  }
  return total;
}

}  // namespace

TEST(GradedRing, HilbertFunctionMatchesInclusionExclusion) {
  const std::vector<std::string> defs{
      "field 13\nvar x 1\nvar y 1\nrel x^2",
      "field 13\nvar x 3\nvar y 2\nrel x^2+y^3",
      "field 13\nvar x 1\nvar y 1\nvar z 1\nrel x^2\nrel y^2",
      "field 13\nvar x 1\nvar y 1\nvar z 1\nvar w 1\nrel x*y-z*w",
      "field 7\nvar a 2\nvar b 1\nvar c 1\nrel a*b-c^3\nrel a^2+b^4",
  };
  for (const auto& text : defs) {
    GradedRing r = parse_ring(text);
    for (int d = 0; d <= 14; ++d)
      EXPECT_EQ(static_cast<long long>(r.dim(d)), ci_dim(r.weights(), r.relation_degrees(), d)) << text << " d=" << d;
    auto series = complete_intersection_hilbert(r.weights(), r.relation_degrees(), 14);
    for (int d = 0; d <= 14; ++d) EXPECT_EQ(series[static_cast<std::size_t>(d)], static_cast<long long>(r.dim(d)));
  }
}

TEST(GradedRing, DimensionsAndRegularity) {
  GradedRing a = parse_ring("field 13\nvar x 1\nvar y 1\nrel x^2");
  EXPECT_EQ(a.krull_dim(), 1);
  EXPECT_EQ(a.embedding_dim(), 2);
  EXPECT_EQ(a.codim(), 1);
  EXPECT_FALSE(a.is_regular());
  GradedRing b = parse_ring("field 13\nvar x 1\nvar y 2\nrel x^2-y");
  EXPECT_EQ(b.embedding_dim(), 1);
  EXPECT_TRUE(b.is_regular());
  EXPECT_TRUE(parse_ring("field 13\nvar x 1").is_regular());
}

TEST(GradedRing, RejectsNonRegularSequencesAndBadRelations) {
  EXPECT_THROW(parse_ring("field 13\nvar x 1\nvar y 1\nvar z 1\nrel x*y\nrel x*z"), PreconditionError);
  EXPECT_THROW(parse_ring("field 13\nvar x 1\nvar y 1\nrel x+y^2"), InputError);
  EXPECT_THROW(parse_ring("field 13\nvar x 1\nrel 1"), InputError);
  EXPECT_THROW(parse_ring("field 12\nvar x 1"), InputError);
}

TEST(GradedRing, NormalFormAndQuotient) {
  GradedRing r = parse_ring("field 13\nvar x 1\nvar y 1\nrel x^2");
  const auto& n = r.names();
  EXPECT_TRUE(r.is_zero(parse_polynomial("x^2*y", n, r.field())));
  EXPECT_FALSE(r.is_zero(parse_polynomial("x*y", n, r.field())));
  GradedRing q = r.quotient(r.var(1));
  EXPECT_EQ(q.krull_dim(), 0);
  EXPECT_EQ(q.dim(1), 1u);
  EXPECT_EQ(q.dim(2), 0u);
  EXPECT_THROW(r.quotient(r.var(0)), PreconditionError);
}

TEST(GradedRing, CoordinatesRoundTrip) {
  GradedRing r = parse_ring("field 13\nvar x 3\nvar y 2\nrel x^2+y^3");
  Polynomial f = parse_polynomial("x^2*y + 4*y^4", r.names(), r.field());
  auto c = r.coordinates(f, 8);
  EXPECT_EQ(r.from_coordinates(c, 8), r.normal_form(f));
  EXPECT_TRUE(r.same_as(parse_ring("field 13\nvar x 3\nvar y 2\nrel x^2+y^3")));
  EXPECT_FALSE(r.same_as(parse_ring("field 13\nvar x 3\nvar y 2\nrel x^2-y^3")));
}
