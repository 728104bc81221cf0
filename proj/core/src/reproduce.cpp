#include "gchar/reproduce.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <tuple>

#include "gchar/catalog.hpp"
#include "gchar/error.hpp"
#include "gchar/parse.hpp"
#include "gchar/series.hpp"

namespace gchar {

bool SuiteResult::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

const Check& SuiteResult::check(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return c;
  throw InputError("suite " + suite + " has no check '" + name + "'");
}

Report to_report(const SuiteResult& r) {
  Report rep;
  for (const auto& c : r.checks)
    rep.add(c.name, r.suite, c.actual, c.status, "expected " + c.expected + ": " + (c.pass ? "PASS" : "FAIL"));
  return rep;
}

namespace {

using Checks = std::vector<Check>;

// Runs body; an exception becomes a failed check.
void run(Checks& out, const std::string& name, const std::string& expected, const std::function<std::string()>& body,
         const std::string& status = kExact) {
  Check c{name, expected, {}, false, status};
  try {
    c.actual = body();
    c.pass = c.actual == expected;
  } catch (const std::exception& e) {
    c.actual = std::string("error: ") + e.what();
  }
  out.push_back(std::move(c));
}

std::string str(long long v) { return std::to_string(v); }
std::string str(const BigInt& v) { return v.str(); }
std::string cmp(long long a, long long b) { return a < b ? " < " : a > b ? " > " : " = "; }

PolyMatrix constant_matrix(const GradedRing& R, const Matrix& a) {
  PolyMatrix out(a.rows(), a.cols(), R.nvars(), R.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j)) out(i, j) = Polynomial::constant(R.nvars(), R.field(), a(i, j));
  return out;
}

PolyMatrix unit_column(const GradedRing& R) {
  PolyMatrix a(1, 1, R.nvars(), R.field());
  a(0, 0) = R.one();
  return a;
}

// 0 -> m -> R -> k -> 0, slots 1, 0, -1.
ChainComplex maximal_ideal_sequence(const GradedRing& R) {
  GradedModule m = maximal_ideal(R);
  ChainComplex c(R);
  c.set_slot(1, m);
  c.set_slot(0, ring_module(R).relabeled("R"));
  c.set_slot(-1, residue_field(R));
  PolyMatrix inc(1, R.nvars(), R.nvars(), R.field());
  for (std::size_t i = 0; i < R.nvars(); ++i) inc(0, i) = R.var(i);
  c.set_differential(1, inc);
  c.set_differential(0, unit_column(R));
  return c;
}

Checks suite_exdim1(const ReproduceOptions& o) {
  Checks out;
  CatalogEntry e = build("hypersurface-dim1", {}, o.prime);
  const GradedRing& R = e.ring;
  const GradedModule& k = e.module("k");
  const GradedModule& m = e.module("m");
  run(out, "chi_g(k)", "1", [&] { return str(chi_g(k, 0, o.dmax)); });
  run(out, "chi_g(R/m^t), t=1..4", "1,1,1,1", [&] {
    std::vector<long long> v;
    for (int t = 1; t <= 4; ++t) v.push_back(chi_g(e.module("R_m" + std::to_string(t)), 0, o.dmax));
    return join(v);
  });
  run(out, "chi_g(m), beta0(m), chi_g_1..3(m)", "2,2,0,0,0", [&] {
    GBetti g = g_betti(m, o.dmax);
    return join({g.chi(0), static_cast<long long>(beta0(m)), g.chi(1), g.chi(2), g.chi(3)});
  });
  run(out, "0->m->R->k: alternating beta0 sum < 0 < chi_g(k)", "-1 < 0 < 1, not proper", [&] {
    PropernessReport p = properness_test(maximal_ideal_sequence(R), {}, o.dmax);
    return str(p.alternating_sum) + " < 0 < " + str(p.chi_g) +
           (p.verdict == Properness::not_proper ? ", not proper" : ", proper");
  });
  run(out, "chi_g(m/y^2R) = beta0(m)-1 < beta0(m/y^2R)", "1 = 1 < 2", [&] {
    const GradedModule& q = e.module("m_y2");
    return str(chi_g(q, 0, o.dmax)) + " = " + str(static_cast<long long>(beta0(m)) - 1) + " < " +
           str(static_cast<long long>(beta0(q)));
  });
  run(out, "0->m->R->k: chi_g(k) vs chi_g(m)+chi_g(R)", "1 < 3", [&] {
    if (!is_exact(maximal_ideal_sequence(R), o.dmax)) return std::string("sequence not exact");
    const long long a = chi_g(k, 0, o.dmax);
    const long long b = chi_g(m, 0, o.dmax) + chi_g(ring_module(R), 0, o.dmax);
    return str(a) + cmp(a, b) + str(b);
  });
  run(out, "chi_g(R/m^2) vs length(R/m^2)*chi_g(k)", "1 < 3", [&] {
    const GradedModule& q = e.module("R_m2");
    LengthResult l = length(q, o.dmax);
    if (!l.finite) return std::string("no finite-length certificate");
    const long long a = chi_g(q, 0, o.dmax);
    const long long b = l.length * chi_g(k, 0, o.dmax);
    return str(a) + cmp(a, b) + str(b);
  });
  return out;
}

Checks suite_notproper(const ReproduceOptions& o) {
  Checks out;
  CatalogEntry e = build("xy", {}, o.prime);
  const GradedRing& R = e.ring;
  const GradedModule& m = e.module("m");
  const Polynomial s = R.var(0) + R.var(1);
  ChainComplex t = tensor(koszul(R, {s}), m);
  Generators sm{PolyMatrix::identity(m.num_generators(), R.nvars(), R.field()).scaled(s), m.degrees()};
  for (auto& d : sm.degrees) d += 1;
  GradedModule q = quotient(m, sm).relabeled("m/sm");
  ChainComplex aug = augment(t, q, PolyMatrix::identity(m.num_generators(), R.nvars(), R.field()));
  run(out, "m (x) Koszul(s) -> m/sm exact", "true", [&] { return std::string(is_exact(aug, o.dmax) ? "true" : "false"); });
  run(out, "slots totally reflexive", "true", [&] {
    for (int n : t.indices())
      if (!is_totally_reflexive(t.slot(n), o.dmax)) return std::string("false");
    return std::string("true");
  });
  PropernessReport p;
  bool ok = false;
  std::string err;
  try {
    p = properness_test(aug, {}, o.dmax);
    ok = true;
  } catch (const std::exception& ex) {
    err = ex.what();
  }
  auto need = [&](auto f) {
    return [&, f] {
      if (!ok) throw ConsistencyError(err);
      return f();
    };
  };
  run(out, "alternating beta0 sum", "0", need([&] { return str(p.alternating_sum); }));
  run(out, "chi_g(m/sm)", "2", need([&] { return str(p.chi_g); }));
  run(out, "verdict", "not proper",
      need([&] { return std::string(p.verdict == Properness::not_proper ? "not proper" : "proper"); }));
  return out;
}

// beta_n(k) = sum_j C(e, n-2j) C(c-1+j, j).
BigInt poincare_coefficient(int e, int c, int n) {
  if (c == 0) return binomial(e, n);
  BigInt s = 0;
  for (int j = 0; 2 * j <= n; ++j) s += binomial(e, n - 2 * j) * binomial(c - 1 + j, j);
  return s;
}

Checks suite_series(int maxd) {
  Checks out;
  for (int c = 1; c <= 2; ++c)
    for (int d = 1; d <= maxd; ++d) {
      BigInt expect = c == 1 ? BigInt(1) << (d - 1) : d == 1 ? BigInt(1) : BigInt(d - 1) * (BigInt(1) << (d - 2)) + 1;
      run(out, "chi_g(k) c=" + std::to_string(c) + " d=" + std::to_string(d), str(expect),
          [&] { return str(chi_g_of_k(CIShape{d + c, c})); });
    }
  run(out, "relative Betti numbers of k vs Poincare coefficients", "agree", [&] {
    for (int c = 1; c <= 2; ++c)
      for (int d = 1; d <= maxd; ++d) {
        auto g = g_betti_of_k(CIShape{d + c, c});
        if (g.size() != static_cast<std::size_t>(d + 1) || g[0] != 1 || (d >= 1 && g[1] != 0))
          return "shape mismatch at c=" + std::to_string(c) + " d=" + std::to_string(d);
        for (int n = 2; n <= d; ++n)
          if (g[static_cast<std::size_t>(n)] != poincare_coefficient(d + c, c, d - n))
            return "mismatch at c=" + std::to_string(c) + " d=" + std::to_string(d) + " n=" + std::to_string(n);
      }
    return std::string("agree");
  });
  return out;
}

Checks suite_series_full() {
  Checks out = suite_series(12);
  run(out, "binomial identity, 2 <= a <= 16, all b", "holds", [] {
    for (int a = 2; a <= 16; ++a)
      for (int b = -1; b <= a + 1; ++b)
        if (!binomial_identity_check(a, b)) return "fails at a=" + std::to_string(a) + " b=" + std::to_string(b);
    return std::string("holds");
  });
  return out;
}

Checks suite_engine_series(const ReproduceOptions& o) {
  Checks out;
  const std::vector<std::pair<std::string, CIShape>> rings{
      {"hypersurface-dim1", {2, 1}}, {"quadric3", {3, 1}}, {"quadric-4var", {4, 1}}, {"ci-3-2", {3, 2}}};
  for (const auto& [name, shape] : rings) {
    std::vector<long long> want;
    TruncatedSeries p = poincare_series(shape, o.hmax);
    for (int n = 0; n <= o.hmax; ++n) want.push_back(static_cast<long long>(p[n]));
    run(out, "beta_0.." + std::to_string(o.hmax) + "(k) over " + name + " (e=" + std::to_string(shape.embdim) +
                 ", c=" + std::to_string(shape.codim) + ")",
        join(want), [&] {
          CatalogEntry e = build(name, {}, o.prime);
          if (e.ring.embedding_dim() != shape.embdim || e.ring.codim() != shape.codim)
            return std::string("ring shape mismatch");
          Resolution r(residue_field(e.ring), o.dmax);
          r.extend_to(o.hmax);
          return join(r.betti(o.hmax));
        });
  }
  return out;
}

Checks suite_gbetti_k(const ReproduceOptions& o) {
  Checks out;
  for (const auto& [name, want] : std::vector<std::pair<std::string, std::string>>{
           {"hypersurface-dim1", "1,0"}, {"quadric3", "1,0,1"}}) {
    CatalogEntry e = build(name, {}, o.prime);
    std::optional<GApproximation> a;
    std::string err;
    try {
      a = g_approximation(e.module("k"), o.dmax);
    } catch (const std::exception& ex) {
      err = ex.what();
    }
    run(out, "beta^G(k) over " + name + " via G-approximation", want, [&] {
      if (!a) throw ConsistencyError(err);
      return join(g_betti(*a, o.dmax).values);
    });
    run(out, "beta^G(k) over " + name + " via Hom(G,k)", want, [&] {
      if (!a) throw ConsistencyError(err);
      std::vector<long long> h = hom_to_residue_ranks(strict_resolution(*a, o.dmax).complex);
      const std::size_t len = static_cast<std::size_t>(a->gdim) + 1;
      for (std::size_t n = len; n < h.size(); ++n)
        if (h[n] != 0) return "nonzero beyond G-dimension: " + join(h);
      h.resize(len, 0);
      return join(h);
    });
  }
  return out;
}

Checks suite_musyz(const ReproduceOptions& o) {
  Checks out;
  for (const auto& [name, kd, want] : std::vector<std::tuple<std::string, std::string, std::string>>{
           {"hypersurface-dim1", "K1", "2 = 2"}, {"quadric3", "K2", "4 = 4"}}) {
    run(out, "beta0(Hom(" + kd + ",R)) = beta_{d-1}(k)+1 over " + name, want, [&] {
      CatalogEntry e = build(name, {}, o.prime);
      const int d = e.ring.krull_dim();
      const long long lhs = static_cast<long long>(beta0(dual(e.module(kd), o.dmax).module));
      const long long rhs = residue_field_resolution(e.ring, d, o.dmax).beta(d - 1) + 1;
      return str(lhs) + (lhs == rhs ? " = " : " != ") + str(rhs);
    });
  }
  return out;
}

// Failures of the four chi^G / rank / pdim / G-dim properties on one module.
std::vector<std::string> property_failures(const GradedModule& m, const RankOptions& ro) {
  std::vector<std::string> f;
  Analysis a = analyze(m, ro);
  const long long chi = a.g_betti.chi(0);
  const bool pf = a.pdim.finite();
  if ((chi == 0) != (pf && a.rank && *a.rank == 0)) f.push_back("chi_g=0 iff pdim finite and rank 0");
  if ((a.rank && chi == *a.rank) != pf) f.push_back("chi_g=rank iff pdim finite");
  for (int i = 0; i <= a.gdim + 2; ++i)
    if (i != 1 && a.g_betti.chi(i) < 0) f.push_back("chi_g_" + std::to_string(i) + " < 0");
  for (int i = 2; i <= a.gdim + 2; ++i)
    if ((a.g_betti.chi(i) == 0) != (a.gdim < i)) f.push_back("chi_g_" + std::to_string(i) + "=0 iff gdim<" + std::to_string(i));
  return f;
}

Checks suite_chirank(const ReproduceOptions& o) {
  Checks out;
  RankOptions ro;
  ro.seed = o.seed;
  ro.dmax = o.dmax;
  for (const auto& info : catalog_list()) {
    CatalogEntry e = build(info.name, {}, o.prime);
    std::vector<Candidate> sample = sample_modules(e, o.samples, o.seed);
    run(out, info.name + ": properties over sampled modules", std::to_string(o.samples) + " modules, 0 failures", [&] {
      std::size_t failures = 0;
      std::string first;
      for (const auto& c : sample) {
        std::vector<std::string> f;
        try {
          f = property_failures(c.module, ro);
        } catch (const std::exception& ex) {
          f.push_back(std::string("error: ") + ex.what());
        }
        if (!f.empty() && first.empty()) first = " (first: " + c.name + ": " + f.front() + ")";
        failures += f.empty() ? 0 : 1;
      }
      return std::to_string(sample.size()) + " modules, " + std::to_string(failures) + " failures" + first;
    }, probabilistic(o.seed));
  }
  return out;
}

Checks suite_regular_quotient(const ReproduceOptions& o) {
  Checks out;
  struct Case {
    std::string entry, module, element, want;
  };
  const std::vector<Case> cases{{"hypersurface-dim1", "m", "y", "2"},
                                {"hypersurface-dim1", "m+R", "y", "2"},
                                {"hypersurface-dim1", "R", "y", "0"},
                                {"An-odd", "Rplus", "y", "1"},
                                {"cusp", "m", "y", "2"}};
  for (const auto& c : cases) {
    run(out, "chi_g(M/sM) = chi_g(M) - frank(M), M=" + c.module + " over " + c.entry + ", s=" + c.element, c.want, [&] {
      CatalogEntry e = build(c.entry, {}, o.prime);
      GradedModule m = c.module == "m+R" ? direct_sum(e.module("m"), e.module("R")) : e.module(c.module);
      const Polynomial s = parse_polynomial(c.element, e.ring.names(), e.ring.field());
      RegularQuotientReport r = quotient_by_regular(m, s, o.dmax);
      const long long formula = r.chi_g_m - r.f_rank;
      if (r.holds && r.chi_g_quotient_cone == formula && r.chi_g_quotient_engine == formula) return str(formula);
      return "cone " + str(r.chi_g_quotient_cone) + ", engine " + str(r.chi_g_quotient_engine) + ", formula " + str(formula);
    });
  }
  return out;
}

Checks suite_basechange(const ReproduceOptions& o) {
  Checks out;
  run(out, "chi_g_R(R/(x1)) vs chi_g_{R/(x0+x1)}(k) over x0x1, d=1", "1 = 1", [&] {
    CatalogEntry e = build("x0x1", {{"d", "1"}}, o.prime);
    const Polynomial s = e.ring.var(0) + e.ring.var(1);
    BaseChangeReport r = base_change_betti(e.module("M"), s, o.dmax);
    const GradedRing q = e.ring.quotient(s);
    const long long over_k = chi_g(residue_field(q), 0, o.dmax);
    const long long a = r.over_r.chi(0), b = r.over_quotient.chi(0);
    if (!r.equal || b != over_k) return "betti " + join(r.over_r.values) + " vs " + join(r.over_quotient.values);
    return str(a) + cmp(a, b) + str(b);
  });
  for (const auto& [d, want] : std::vector<std::pair<int, std::string>>{{1, "1 = 1"}, {2, "2 > 1"}, {6, "32 < 33"}}) {
    run(out, "hypersurface vs quotient by s in m^2, d=" + std::to_string(d), want, [&, d = d] {
      const long long a = static_cast<long long>(chi_g_of_k(CIShape{d + 1, 1}));
      const long long b = static_cast<long long>(chi_g_of_k(CIShape{d + 1, 2}));
      return str(a) + cmp(a, b) + str(b);
    });
  }
  return out;
}

std::string opt(const std::optional<long long>& v) { return v ? std::to_string(*v) : std::string("none"); }

Checks suite_epsilon_tau(const ReproduceOptions& o) {
  Checks out;
  RankOptions ro;
  ro.seed = o.seed;
  ro.dmax = o.dmax;
  const std::string st = kCatalogRestricted + ", " + probabilistic(o.seed);
  std::map<std::string, std::vector<EpsilonTau>> et;
  std::map<std::string, CatalogEntry> entries;
  for (const std::string name : {"cusp", "An-odd"}) {
    entries.emplace(name, build(name, {}, o.prime));
    try {
      for (int i = 0; i <= 3; ++i) et[name].push_back(epsilon_tau(entries.at(name).candidates(), i, ro));
    } catch (const std::exception&) {
      et[name].clear();
    }
  }
  auto get = [&](const std::string& name, int i) -> const EpsilonTau& {
    if (et[name].size() != 4) throw ConsistencyError("epsilon/tau search failed over " + name);
    return et[name][static_cast<std::size_t>(i)];
  };
  run(out, "cusp epsilon_0", "2", [&] { return opt(get("cusp", 0).epsilon); }, st);
  run(out, "cusp epsilon_1", "1", [&] { return opt(get("cusp", 1).epsilon); }, st);
  run(out, "cusp tau_0", "1", [&] { return opt(get("cusp", 0).tau); }, st);
  run(out, "cusp classification complete", "true",
      [&] { return std::string(entries.at("cusp").classification_complete ? "true" : "false"); });
  run(out, "node epsilon_j, j=0..3", "1,1,1,1", [&] {
    std::string s;
    for (int i = 0; i <= 3; ++i) s += (i ? "," : "") + opt(get("An-odd", i).epsilon);
    return s;
  }, st);
  run(out, "node tau_j, j=0..3", "1,1,1,1", [&] {
    std::string s;
    for (int i = 0; i <= 3; ++i) s += (i ? "," : "") + opt(get("An-odd", i).tau);
    return s;
  }, st);
  run(out, "node chi_g(R+)", "1", [&] { return str(chi_g(entries.at("An-odd").module("Rplus"), 0, o.dmax)); });
  run(out, "node R+ (+) R-: chi_g, rank", "2,1", [&] {
    Analysis a = analyze(entries.at("An-odd").module("Rplus_Rminus"), ro);
    return str(a.g_betti.chi(0)) + "," + opt(a.rank);
  }, probabilistic(o.seed));
  run(out, "epsilon_i, tau_i nonincreasing over i=0..3", "true", [&] {
    for (const std::string name : {"cusp", "An-odd"})
      for (int i = 0; i < 3; ++i) {
        const EpsilonTau &a = get(name, i), &b = get(name, i + 1);
        if (a.epsilon && (!b.epsilon || *b.epsilon > *a.epsilon)) return "epsilon increases over " + name;
        if (a.tau && (!b.tau || *b.tau > *a.tau)) return "tau increases over " + name;
      }
    return std::string("true");
  }, st);
  return out;
}

Matrix random_matrix(std::size_t r, std::size_t c, const PrimeField& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<Scalar> d(0, f.prime() - 1);
  Matrix a(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) a(i, j) = d(rng);
  return a;
}

// A random invertible matrix and its inverse, as a product of elementary operations.
std::pair<Matrix, Matrix> random_invertible(std::size_t n, const PrimeField& f, std::mt19937_64& rng) {
  Matrix g = Matrix::identity(n, f), gi = Matrix::identity(n, f);
  if (n < 2) return {g, gi};
  std::uniform_int_distribution<std::size_t> pos(0, n - 1);
  std::uniform_int_distribution<Scalar> val(1, f.prime() - 1);
  for (std::size_t step = 0; step < 3 * n; ++step) {
    const std::size_t i = pos(rng), j = pos(rng);
    if (i == j) continue;
    const Scalar c = val(rng);
    // g <- g E where E adds c * column i to column j; gi <- E^{-1} gi.
    for (std::size_t r = 0; r < n; ++r) g(r, j) = f.add(g(r, j), f.mul(c, g(r, i)));
    for (std::size_t q = 0; q < n; ++q) gi(i, q) = f.sub(gi(i, q), f.mul(c, gi(j, q)));
  }
  return {g, gi};
}

// Complex of k-vector spaces (slots 0..len) with prescribed homology, in a random basis.
std::pair<ChainComplex, long long> random_vector_space_complex(const GradedRing& R, std::mt19937_64& rng) {
  const PrimeField& f = R.field();
  std::uniform_int_distribution<int> small(0, 3), lenr(1, 4);
  const int len = lenr(rng);
  std::vector<std::size_t> b(static_cast<std::size_t>(len) + 2, 0), h(b.size(), 0), a(b.size(), 0);
  // C_n = B_n (+) H_n (+) C'_n with d_n : C'_n -> B_{n-1} an isomorphism.
  for (int n = 0; n <= len; ++n) {
    h[static_cast<std::size_t>(n)] = static_cast<std::size_t>(small(rng));
    b[static_cast<std::size_t>(n)] = n < len ? static_cast<std::size_t>(small(rng)) : 0;
  }
  for (int n = 0; n <= len; ++n) {
    const std::size_t un = static_cast<std::size_t>(n);
    a[un] = b[un] + h[un] + (n > 0 ? b[un - 1] : 0);
  }
  std::vector<std::pair<Matrix, Matrix>> basis;
  for (int n = 0; n <= len; ++n) basis.push_back(random_invertible(a[static_cast<std::size_t>(n)], f, rng));
  ChainComplex c(R);
  for (int n = 0; n <= len; ++n) {
    std::vector<GradedModule> parts(a[static_cast<std::size_t>(n)], residue_field(R));
    c.set_slot(n, direct_sum(parts, R));
  }
  long long hsum = 0;
  for (int n = 0; n <= len; ++n) hsum += (n % 2 ? -1 : 1) * static_cast<long long>(h[static_cast<std::size_t>(n)]);
  for (int n = 1; n <= len; ++n) {
    const std::size_t un = static_cast<std::size_t>(n);
    Matrix d(a[un - 1], a[un], f);
    const std::size_t src = b[un] + h[un];
    for (std::size_t t = 0; t < b[un - 1]; ++t) d(t, src + t) = 1;
    // In the new bases: g_{n-1} d g_n^{-1}.
    Matrix dd = basis[un - 1].first * d * basis[un].second;
    if (dd.rows() && dd.cols()) c.set_differential(n, constant_matrix(R, dd));
  }
  return {c, hsum};
}

Checks suite_kernel(const ReproduceOptions& o) {
  Checks out;
  std::mt19937_64 rng(o.seed);
  const std::vector<std::string> std_rings{"hypersurface-dim1", "xy", "regular2", "quadric3"};
  run(out, "d^2 = 0 on constructed complexes", "all valid", [&] {
    std::vector<std::pair<std::string, ChainComplex>> cs;
    for (const auto& info : catalog_list()) {
      CatalogEntry e = build(info.name, {}, o.prime);
      const GradedRing& R = e.ring;
      std::vector<Polynomial> vars;
      for (std::size_t i = 0; i < R.nvars(); ++i) vars.push_back(R.var(i));
      ChainComplex kz = koszul(R, vars);
      cs.push_back({info.name + " koszul", kz});
      cs.push_back({info.name + " koszul (x) k", tensor(kz, residue_field(R))});
      cs.push_back({info.name + " koszul (x) koszul", tensor(koszul(R, {vars.front()}), koszul(R, {vars.back()}))});
      ChainMap id{kz, kz, {}};
      for (int n : kz.indices()) id.components[n] = PolyMatrix::identity(kz.slot(n).num_generators(), R.nvars(), R.field());
      cs.push_back({info.name + " cone(id)", cone(id)});
      Resolution rk(residue_field(R), o.dmax);
      rk.extend_to(4);
      cs.push_back({info.name + " resolution of k", rk.complex(4)});
      cs.push_back({info.name + " dual resolution of k", dualize(rk.complex(3), o.dmax)});
      cs.push_back({info.name + " soft truncation", soft_truncation(rk.complex(4), 2, o.dmax)});
      if (!R.is_regular()) cs.push_back({info.name + " strict resolution of k", strict_resolution(residue_field(R), o.dmax).augmented()});
      for (const auto& mf : e.factorizations) cs.push_back({info.name + " window " + mf.name, complete_resolution_window(R, mf.mf)});
    }
    for (const auto& [name, c] : cs) {
      std::string why;
      if (!c.is_valid(&why)) return name + ": " + why;
    }
    return std::string("all valid");
  });
  run(out, "alternating sums on 100 random finite-length complexes", "100/100", [&] {
    int ok = 0;
    std::string first;
    std::uniform_int_distribution<int> coin(0, 1), r3(1, 3), t3(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
      try {
        CatalogEntry e = build(std_rings[static_cast<std::size_t>(trial) % std_rings.size()], {}, o.prime);
        const GradedRing& R = e.ring;
        ChainComplex c(R);
        std::optional<long long> expect;
        if (coin(rng)) {
          auto [vc, h] = random_vector_space_complex(R, rng);
          c = vc;
          expect = h;
        } else {
          std::vector<Polynomial> forms;
          const int r = r3(rng);
          std::uniform_int_distribution<Scalar> coeff(0, R.field().prime() - 1);
          for (int i = 0; i < r; ++i) {
            Polynomial l = R.zero();
            for (std::size_t v = 0; v < R.nvars(); ++v) l += R.var(v).scaled(coeff(rng));
            forms.push_back(l);
          }
          const int t = R.krull_dim() >= 2 ? std::min(t3(rng), 2) : t3(rng);
          c = tensor(koszul(R, forms), cyclic_quotient(R, power_of_maximal_ideal(R, t)));
        }
        AlternatingSums s = alternating_sum(c, o.dmax);
        if (s.slots == s.homology && (!expect || *expect == s.homology)) ++ok;
        else if (first.empty()) first = " (trial " + std::to_string(trial) + ")";
      } catch (const std::exception& ex) {
        if (first.empty()) first = " (trial " + std::to_string(trial) + ": " + ex.what() + ")";
      }
    }
    return std::to_string(ok) + "/100" + first;
  });
  run(out, "rank-nullity on 1000 random matrices", "1000/1000", [&] {
    const PrimeField f(o.prime);
    std::uniform_int_distribution<std::size_t> dim(1, 12);
    int ok = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      const std::size_t r = dim(rng), c = dim(rng), k = std::uniform_int_distribution<std::size_t>(0, std::min(r, c))(rng);
      Matrix a = random_matrix(r, k, f, rng) * random_matrix(k, c, f, rng);
      if (k == 0) a = Matrix(r, c, f);
      const std::size_t rk = rank(a);
      Matrix ker = kernel_basis(a);
      const bool good = rk + ker.cols() == c && rk <= k && rank(a.transpose()) == rk && rank(ker) == ker.cols() &&
                        (ker.cols() == 0 || (a * ker).is_zero());
      ok += good ? 1 : 0;
    }
    return std::to_string(ok) + "/1000";
  });
  return out;
}

const std::map<std::string, std::function<Checks(const ReproduceOptions&)>>& suites() {
  static const std::map<std::string, std::function<Checks(const ReproduceOptions&)>> s{
      {"exdim1", suite_exdim1},
      {"notproper", suite_notproper},
      {"series", [](const ReproduceOptions&) { return suite_series_full(); }},
      {"chici", [](const ReproduceOptions&) { return suite_series(6); }},
      {"engine-series", suite_engine_series},
      {"gbetti-k", suite_gbetti_k},
      {"musyz", suite_musyz},
      {"chirank", suite_chirank},
      {"regular-quotient", suite_regular_quotient},
      {"basechange", suite_basechange},
      {"epsilon-tau", suite_epsilon_tau},
      {"kernel", suite_kernel},
  };
  return s;
}

}  // namespace

std::vector<std::string> suite_names() {
  return {"exdim1",           "series",     "engine-series", "gbetti-k", "musyz",  "chirank",
          "notproper",        "regular-quotient", "basechange", "epsilon-tau", "kernel", "chici"};
}

SuiteResult reproduce(const std::string& suite, const ReproduceOptions& opts) {
  auto it = suites().find(suite);
  if (it == suites().end()) throw InputError("unknown suite '" + suite + "'");
  if (opts.hmax < 1 || opts.dmax < 1) throw InputError("hmax and dmax must be positive");
  const auto t0 = std::chrono::steady_clock::now();
  SuiteResult r{suite, it->second(opts), 0};
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace gchar
