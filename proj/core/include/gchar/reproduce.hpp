#pragma once

// Named computation suites with expected values, run by `gchar reproduce`
// and by the acceptance driver.

#include <cstdint>
#include <string>
#include <vector>

#include "gchar/report.hpp"
#include "gchar/resolution.hpp"

namespace gchar {

struct Check {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
  std::string status = kExact;
};

struct SuiteResult {
  std::string suite;
  std::vector<Check> checks;
  double seconds = 0;
  bool passed() const;
  // Throws InputError for an unknown check name.
  const Check& check(const std::string& name) const;
};

struct ReproduceOptions {
  int hmax = kDefaultHmax;
  int dmax = kDefaultDmax;
  std::uint64_t seed = 0;
  std::size_t samples = 20;  // modules per ring in the property suite
  std::uint32_t prime = kDefaultPrime;
};

std::vector<std::string> suite_names();
// Throws InputError for an unknown suite. Computation errors inside a check
// turn that check into a failure carrying the error text.
SuiteResult reproduce(const std::string& suite, const ReproduceOptions& opts = {});
Report to_report(const SuiteResult& r);

}  // namespace gchar
