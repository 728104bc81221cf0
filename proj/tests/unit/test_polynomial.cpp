#include <gtest/gtest.h>

#include "gchar/error.hpp"
#include "gchar/parse.hpp"
#include "gchar/polynomial.hpp"
#include "oracles.hpp"

using namespace gchar;

namespace {
const std::vector<std::string> xyz{"x", "y", "z"};
Polynomial P(const std::string& s) { return parse_polynomial(s, xyz, PrimeField(13)); }
}  // namespace

TEST(Polynomial, ParsesAndPrintsCanonically) {
  EXPECT_EQ(P("x*y + y*x"), P("2*x*y"));
  EXPECT_EQ(P("x^2 - x^2"), P("0"));
  EXPECT_EQ(P("-1"), P("12"));
  EXPECT_EQ(P(P("3*x^2*y - z + 5").to_string(xyz)), P("3*x^2*y - z + 5"));
  EXPECT_THROW(P("x +"), InputError);
  EXPECT_THROW(P("w"), InputError);
}

TEST(Polynomial, RingAxioms) {
  Polynomial a = P("x + 2*y"), b = P("y^2 - z"), c = P("x*z + 7");
  EXPECT_EQ(a * (b + c), a * b + a * c);
  EXPECT_EQ(a * b, b * a);
  EXPECT_EQ((a * b) * c, a * (b * c));
  EXPECT_EQ(a - a, P("0"));
  EXPECT_EQ(a.pow(3), a * a * a);
}

TEST(Polynomial, FreshmansDreamInCharacteristicP) {
  PrimeField f(13);
  Polynomial s = parse_polynomial("x + y", xyz, f);
  EXPECT_EQ(s.pow(13), parse_polynomial("x^13 + y^13", xyz, f));
}

TEST(Polynomial, WeightedDegreeAndHomogeneity) {
  const std::vector<int> w{3, 2, 1};
  EXPECT_EQ(P("x^2 + y^3").degree(w), 6);
  EXPECT_TRUE(P("x^2 + y^3").is_homogeneous(w));
  EXPECT_FALSE(P("x + y").is_homogeneous(w));
  EXPECT_THROW(P("x + y").degree(w), InputError);
}

TEST(Polynomial, SubstitutionComposes) {
  PrimeField f(13);
  std::vector<std::string> t{"t"};
  std::vector<Polynomial> sub{parse_polynomial("t^3", t, f), parse_polynomial("-t^2", t, f),
                              parse_polynomial("0", t, f)};
  EXPECT_TRUE(P("x^2 + y^3").substitute(sub).is_zero());
  EXPECT_FALSE(P("x^2 - y^3").substitute(sub).is_zero());
}

TEST(Monomials, CountMatchesGeneratingFunction) {
  for (const auto& w : std::vector<std::vector<int>>{{1, 1}, {1, 1, 1}, {3, 2}, {4, 2, 1}})
    for (int d = 0; d <= 12; ++d)
      EXPECT_EQ(static_cast<long long>(monomials_of_degree(w, d).size()), oracle::count_monomials(w, d));
}
