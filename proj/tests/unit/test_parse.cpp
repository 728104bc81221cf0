#include <string>

#include <gtest/gtest.h>

#include "gchar/error.hpp"
#include "gchar/parse.hpp"

using namespace gchar;

TEST(Parse, RingRoundTrip) {
  GradedRing r = parse_ring("# cusp\nfield 13\nname cusp\nvar x 3\nvar y 2\nrel x^2 + y^3\n");
  EXPECT_EQ(r.label(), "cusp");
  GradedRing back = parse_ring(ring_to_text(r));
  EXPECT_TRUE(back.same_as(r));
  EXPECT_EQ(back.label(), "cusp");
}

TEST(Parse, ModuleRoundTrip) {
  GradedRing r = parse_ring("field 13\nvar x 1\nvar y 1\nrel x^2");
  GradedModule m = parse_module("gens 0 1\nrow 0 col 0 : x\nrow 0 col 1 : y^2\nrow 1 col 1 : x\n", r);
  GradedModule back = parse_module(module_to_text(m), r);
  for (int d = 0; d < 6; ++d) EXPECT_EQ(back.dim(d), m.dim(d));
  EXPECT_EQ(back.relations(), m.relations());
}

TEST(Parse, ErrorsCarryLineNumbers) {
  auto message = [](const std::string& ring, const std::string& mod) {
    try {
      GradedRing r = parse_ring(ring);
      if (!mod.empty()) parse_module(mod, r);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(message("field 13\nvar x 1\nbogus 3\n", "").find("line 3"), std::string::npos);
  EXPECT_NE(message("field 13\nvar x 1\nvar x 2\n", "").find("line 3"), std::string::npos);
  EXPECT_NE(message("field 13\nvar x 1\n", "gens 0\nrow 4 col 0 : x\n").find("line 2"), std::string::npos);
  const std::string two = "field 13\nvar x 1\nvar y 1\n";
  EXPECT_NE(message(two, "gens 0 0\nrow 0 col 0 : x\nrow 1 col 0 : y^2\n").find("line 3"), std::string::npos);
  EXPECT_NE(message(two, "row 0 col 0 : x\n").find("line 1"), std::string::npos);
  EXPECT_FALSE(message("field 13\n", "").empty());
}

TEST(Parse, MissingFileIsAnInputError) {
  EXPECT_THROW(load_ring("/nonexistent/ring.gr"), InputError);
}
