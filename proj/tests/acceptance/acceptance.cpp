// One line per acceptance criterion. Each criterion runs its reproduction
// suite, requires every check to pass, re-asserts the headline values
// against literals kept here, and enforces a wall-clock budget.

#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "gchar/error.hpp"
#include "gchar/reproduce.hpp"

using namespace gchar;

namespace {

struct Criterion {
  int id;
  std::string suite;
  double budget_seconds;  // 0: none
  std::map<std::string, std::string> literals;
};

std::vector<Criterion> criteria() {
  std::vector<Criterion> out{
      {1, "exdim1", 30, {{"chi_g(k)", "1"},
                         {"chi_g(R/m^t), t=1..4", "1,1,1,1"},
                         {"chi_g(m), beta0(m), chi_g_1..3(m)", "2,2,0,0,0"},
                         {"0->m->R->k: alternating beta0 sum < 0 < chi_g(k)", "-1 < 0 < 1, not proper"},
                         {"chi_g(m/y^2R) = beta0(m)-1 < beta0(m/y^2R)", "1 = 1 < 2"}}},
      {2, "series", 1, {}},
      {3, "engine-series", 120, {}},
      {4, "gbetti-k", 0, {{"beta^G(k) over hypersurface-dim1 via G-approximation", "1,0"},
                          {"beta^G(k) over quadric3 via G-approximation", "1,0,1"},
                          {"beta^G(k) over quadric3 via Hom(G,k)", "1,0,1"}}},
      {5, "musyz", 0, {{"beta0(Hom(K1,R)) = beta_{d-1}(k)+1 over hypersurface-dim1", "2 = 2"},
                       {"beta0(Hom(K2,R)) = beta_{d-1}(k)+1 over quadric3", "4 = 4"}}},
      {6, "chirank", 0, {}},
      {7, "notproper", 0, {{"alternating beta0 sum", "0"}, {"chi_g(m/sm)", "2"}, {"verdict", "not proper"}}},
      {8, "regular-quotient", 0, {}},
      {9, "basechange", 0, {{"hypersurface vs quotient by s in m^2, d=6", "32 < 33"}}},
      {10, "epsilon-tau", 0, {{"cusp epsilon_0", "2"}, {"cusp epsilon_1", "1"}, {"cusp tau_0", "1"},
                              {"node epsilon_j, j=0..3", "1,1,1,1"}, {"node tau_j, j=0..3", "1,1,1,1"},
                              {"node chi_g(R+)", "1"}, {"node R+ (+) R-: chi_g, rank", "2,1"}}},
      {11, "kernel", 60, {{"alternating sums on 100 random finite-length complexes", "100/100"},
                          {"rank-nullity on 1000 random matrices", "1000/1000"}}},
  };
  // chi^G(k): 2^{d-1} in codimension 1, (d-1) 2^{d-2} + 1 in codimension 2.
  for (int d = 1; d <= 12; ++d) {
    out[1].literals["chi_g(k) c=1 d=" + std::to_string(d)] = std::to_string(1LL << (d - 1));
    out[1].literals["chi_g(k) c=2 d=" + std::to_string(d)] =
        std::to_string(d == 1 ? 1 : (d - 1) * (1LL << (d - 2)) + 1);
  }
  return out;
}

}  // namespace

int main() {
  int failures = 0;
  for (const auto& c : criteria()) {
    std::string why;
    double seconds = 0;
    try {
      SuiteResult r = reproduce(c.suite);
      seconds = r.seconds;
      for (const auto& ch : r.checks)
        if (!ch.pass && why.empty()) why = ch.name + ": got " + ch.actual + ", expected " + ch.expected;
      for (const auto& [name, want] : c.literals) {
        const Check& ch = r.check(name);
        if (ch.actual != want && why.empty()) why = name + ": got " + ch.actual + ", want " + want;
      }
      if (r.checks.empty()) why = "suite ran no checks";
      if (c.budget_seconds > 0 && seconds > c.budget_seconds && why.empty())
        why = "took " + std::to_string(seconds) + " s, budget " + std::to_string(c.budget_seconds) + " s";
    } catch (const std::exception& e) {
      why = e.what();
    }
    const bool ok = why.empty();
    failures += !ok;
    std::printf("criterion %2d %-17s %s  (%.2f s)%s%s\n", c.id, c.suite.c_str(), ok ? "PASS" : "FAIL", seconds,
                ok ? "" : "  ", why.c_str());
  }
  return failures == 0 ? 0 : 1;
}
