#include <gtest/gtest.h>

#include "gchar/error.hpp"
#include "gchar/report.hpp"

using namespace gchar;

TEST(Report, SingleRecordTable) {
  Report r;
  r.add("chi_g", "k", "1");
  EXPECT_EQ(r.to_table(), "chi_g = 1 (exact)\n");
}

TEST(Report, ModuleColumnAppearsForMixedModules) {
  Report r;
  r.add("gdim", "k", "1");
  r.add("chi_g", "m", "2", kCatalogRestricted, "2 <= x");
  EXPECT_EQ(r.to_table(), "k  gdim  = 1 (exact)\nm  chi_g = 2 (catalog-restricted)  [2 <= x]\n");
}

TEST(Report, JsonIsDeterministicAndOrdered) {
  Report r;
  r.add("rank", "M", "3", probabilistic(42));
  const std::string expect =
      "[\n  {\n    \"invariant\": \"rank\",\n    \"module\": \"M\",\n    \"value\": \"3\",\n"
      "    \"status\": \"probabilistic(seed=42)\",\n    \"bounds\": \"\"\n  }\n]\n";
  EXPECT_EQ(r.to_json(), expect);
  EXPECT_EQ(r.to_json(), r.render(Format::json));
  EXPECT_EQ(Report{}.to_json(), "[]\n");
}

TEST(Report, FormatParsing) {
  EXPECT_EQ(parse_format("json"), Format::json);
  EXPECT_EQ(parse_format("table"), Format::table);
  EXPECT_THROW(parse_format("xml"), InputError);
  EXPECT_EQ(join({1, -2, 3}), "1,-2,3");
  EXPECT_EQ(join({}), "");
}
