#include "gchar/catalog.hpp"

#include <algorithm>
#include <deque>
#include <random>
#include <sstream>

#include "gchar/error.hpp"
#include "gchar/parse.hpp"

namespace gchar {

const GradedModule& CatalogEntry::module(const std::string& name) const {
  for (const auto& m : modules)
    if (m.name == name) return m.module;
  throw InputError("catalog entry " + this->name + " has no module '" + name + "'");
}

bool CatalogEntry::has_module(const std::string& name) const {
  return std::any_of(modules.begin(), modules.end(), [&](const NamedModule& m) { return m.name == name; });
}

std::vector<Candidate> CatalogEntry::candidates() const {
  std::vector<Candidate> out;
  std::vector<const NamedModule*> tr;
  for (const auto& m : modules) {
    out.push_back({m.name, m.module});
    if (m.totally_reflexive && m.name != "R") tr.push_back(&m);
  }
  for (std::size_t a = 0; a < tr.size(); ++a)
    for (std::size_t b = a; b < tr.size(); ++b)
      out.push_back({tr[a]->name + "+" + tr[b]->name, direct_sum(tr[a]->module, tr[b]->module)});
  return out;
}

std::optional<Scalar> sqrt_minus_one(const PrimeField& field) {
  const Scalar target = field.neg(1);
  for (Scalar a = 1; a < field.prime(); ++a)
    if (field.mul(a, a) == target) return a;
  return std::nullopt;
}

std::vector<int> infer_row_degrees(const PolyMatrix& phi, const std::vector<int>& weights) {
  const std::size_t n = phi.rows();
  const std::size_t m = phi.cols();
  std::vector<std::optional<int>> row(n), col(m);
  for (std::size_t start = 0; start < n; ++start) {
    if (row[start]) continue;
    row[start] = 0;
    std::deque<std::pair<bool, std::size_t>> queue{{true, start}};
    while (!queue.empty()) {
      auto [is_row, idx] = queue.front();
      queue.pop_front();
      for (std::size_t o = 0; o < (is_row ? m : n); ++o) {
        const Polynomial& e = is_row ? phi(idx, o) : phi(o, idx);
        if (e.is_zero()) continue;
        if (!e.is_homogeneous(weights)) throw InputError("matrix entry is not homogeneous");
        const int deg = e.degree(weights);
        if (is_row) {
          const int want = *row[idx] + deg;
          if (!col[o]) {
            col[o] = want;
            queue.emplace_back(false, o);
          } else if (*col[o] != want) {
            throw InputError("matrix admits no homogeneous twists");
          }
        } else {
          const int want = *col[idx] - deg;
          if (!row[o]) {
            row[o] = want;
            queue.emplace_back(true, o);
          } else if (*row[o] != want) {
            throw InputError("matrix admits no homogeneous twists");
          }
        }
      }
    }
  }
  std::vector<int> out;
  for (auto& r : row) out.push_back(*r);
  if (!out.empty()) {
    const int lo = *std::min_element(out.begin(), out.end());
    for (auto& r : out) r -= lo;
  }
  return out;
}

namespace {

void check_factorization(const GradedRing& ring, const MatrixFactorization& mf) {
  if (!mf.is_valid()) throw InputError("not a matrix factorization: phi*psi and psi*phi must both equal f*I");
  if (!ring.is_zero(mf.f)) throw InputError("matrix factorization of an element that is nonzero in the ring");
}

}  // namespace

GradedModule mf_cokernel(const GradedRing& ring, const MatrixFactorization& mf, const std::string& label) {
  check_factorization(ring, mf);
  return GradedModule(ring, infer_row_degrees(mf.phi, ring.weights()), mf.phi, label);
}

ChainComplex complete_resolution_window(const GradedRing& ring, const MatrixFactorization& mf) {
  check_factorization(ring, mf);
  const auto& w = ring.weights();
  const int e = mf.f.degree(w);
  std::vector<int> r = infer_row_degrees(mf.phi, w);
  std::vector<int> c(mf.phi.cols(), 0);
  for (std::size_t j = 0; j < mf.phi.cols(); ++j)
    for (std::size_t i = 0; i < mf.phi.rows(); ++i)
      if (!mf.phi(i, j).is_zero()) c[j] = r[i] + mf.phi(i, j).degree(w);
  std::vector<int> r_up = r, c_down = c;
  for (auto& d : r_up) d += e;
  for (auto& d : c_down) d -= e;
  ChainComplex t(ring);
  t.set_slot(2, GradedModule::free(ring, r_up));
  t.set_slot(1, GradedModule::free(ring, c));
  t.set_slot(0, GradedModule::free(ring, r));
  t.set_slot(-1, GradedModule::free(ring, c_down));
  t.set_differential(2, mf.psi);
  t.set_differential(1, mf.phi);
  t.set_differential(0, mf.psi);
  t.validate();
  return t;
}

namespace {

struct Builder {
  CatalogEntry entry;

  const GradedRing& R() const { return entry.ring; }
  Polynomial p(const std::string& text) const { return parse_polynomial(text, R().names(), R().field()); }
  void add(const std::string& name, GradedModule m, bool tr = false) {
    entry.modules.push_back({name, m.relabeled(name), tr});
  }
  void add_mf(const std::string& name, const std::string& phi_rows, const std::string& psi_rows, bool add_module = true) {
    auto parse_matrix = [&](const std::string& rows) {
      std::vector<std::vector<Polynomial>> out;
      std::istringstream rs(rows);
      std::string row;
      while (std::getline(rs, row, ';')) {
        std::vector<Polynomial> entries;
        std::istringstream es(row);
        std::string cell;
        while (std::getline(es, cell, ',')) entries.push_back(p(cell));
        out.push_back(entries);
      }
      PolyMatrix mtx(out.size(), out.front().size(), R().nvars(), R().field());
      for (std::size_t i = 0; i < out.size(); ++i)
        for (std::size_t j = 0; j < out[i].size(); ++j) mtx(i, j) = out[i][j];
      return mtx;
    };
    MatrixFactorization mf{parse_matrix(phi_rows), parse_matrix(psi_rows), R().relations().front()};
    entry.factorizations.push_back({name, mf});
    if (add_module) add(name, mf_cokernel(R(), mf), true);
  }
  void basics(bool m_is_tr) {
    add("R", ring_module(R()), true);
    add("k", residue_field(R()));
    add("m", maximal_ideal(R()), m_is_tr);
  }
  void components(std::vector<ComponentData> comps) { entry.ring = entry.ring.with_components(std::move(comps)); }
};

GradedRing make_ring(std::uint32_t prime, const std::string& body, const std::string& label) {
  return parse_ring("field " + std::to_string(prime) + "\nname " + label + "\n" + body);
}

Polynomial param_poly(const PrimeField& f, std::size_t nparams, const std::string& text) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < nparams; ++i) names.push_back("t" + std::to_string(i));
  return parse_polynomial(text, names, f);
}

ComponentData component(const PrimeField& f, const std::string& name, std::size_t nparams,
                        const std::vector<std::string>& coords, bool reduced = true) {
  ComponentData c{name, nparams, {}, reduced};
  for (const auto& s : coords) c.parametrization.push_back(param_poly(f, nparams, s));
  return c;
}

int int_param(const CatalogParams& params, const std::string& key, int def) {
  auto it = params.find(key);
  if (it == params.end()) return def;
  try {
    std::size_t pos = 0;
    int v = std::stoi(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw InputError("parameter " + key + " must be an integer");
  }
}

void reject_unknown(const CatalogParams& params, const std::vector<std::string>& allowed) {
  for (const auto& [k, v] : params)
    if (std::find(allowed.begin(), allowed.end(), k) == allowed.end()) throw InputError("unknown parameter '" + k + "'");
}

std::string signed_term(Scalar c, const std::string& mono, const PrimeField& f) {
  const long long v = f.to_signed(c);
  return (v < 0 ? "-" : "+") + std::to_string(v < 0 ? -v : v) + "*" + mono;
}

CatalogEntry build_hypersurface_dim1(const CatalogParams& params, std::uint32_t prime) {
  reject_unknown(params, {"f"});
  const std::string f = params.count("f") ? params.at("f") : "x^2";
  Builder b{{"hypersurface-dim1", "GF(p)[x,y]/(f), f a binary form (default x^2)", make_ring(prime, "var x 1\nvar y 1\nrel " + f, "hypersurface-dim1"), {}, {}, {}, false}};
  if (b.R().krull_dim() != 1 || b.R().is_regular()) throw InputError("hypersurface-dim1 needs a nonregular binary form");
  const PrimeField& F = b.R().field();
  const bool square = b.p(f) == b.p("x^2");
  if (square) b.components({component(F, "x=0", 1, {"0", "t0"}, false)});
  b.basics(true);
  for (int t = 2; t <= 4; ++t)
    b.add("m" + std::to_string(t), ideal_module(b.R(), power_of_maximal_ideal(b.R(), t)), true);
  for (int t = 1; t <= 4; ++t) b.add("R_m" + std::to_string(t), cyclic_quotient(b.R(), power_of_maximal_ideal(b.R(), t)));
  const GradedModule& m = b.entry.module("m");
  PolyMatrix y2(2, 1, 2, F);
  y2(1, 0) = b.p("y");
  b.add("m_y2", quotient(m, Generators{y2, {2}}));
  b.add("dual_m", dual(m).module, true);
  Resolution rk(residue_field(b.R()), kDefaultDmax);
  rk.extend_to(2);
  b.add("K1", rk.syzygy(1), true);
  if (square) b.add_mf("R_x", "x", "x");
  b.entry.notes.push_back("m/y^2 m uses the regular element y");
  return b.entry;
}

CatalogEntry build_regular2(const CatalogParams& params, std::uint32_t prime) {
  reject_unknown(params, {});
  Builder b{{"regular2", "GF(p)[x,y]", make_ring(prime, "var x 1\nvar y 1", "regular2"), {}, {}, {}, true}};
  b.components({component(b.R().field(), "plane", 2, {"t0", "t1"})});
  b.basics(false);
  b.add("R_m2", cyclic_quotient(b.R(), power_of_maximal_ideal(b.R(), 2)));
  b.add("R_x", cyclic_quotient(b.R(), {b.p("x")}));
  return b.entry;
}

CatalogEntry build_xy(const CatalogParams& params, std::uint32_t prime) {
  reject_unknown(params, {});
  Builder b{{"xy", "GF(p)[x,y]/(xy)", make_ring(prime, "var x 1\nvar y 1\nrel x*y", "xy"), {}, {}, {}, true}};
  const PrimeField& F = b.R().field();
  b.components({component(F, "x=0", 1, {"0", "t0"}), component(F, "y=0", 1, {"t0", "0"})});
  b.basics(true);
  b.add_mf("R_x", "x", "y");
  b.add_mf("R_y", "y", "x");
  b.add("R_m2", cyclic_quotient(b.R(), power_of_maximal_ideal(b.R(), 2)));
  b.entry.notes.push_back("s = x+y is regular; m/sm is the quotient used for non-properness");
  return b.entry;
}

CatalogEntry build_x0x1(const CatalogParams& params, std::uint32_t prime) {
  reject_unknown(params, {"d"});
  const int d = int_param(params, "d", 1);
  if (d < 1 || d > 6) throw InputError("x0x1 needs 1 <= d <= 6");
  std::string body;
  for (int i = 0; i <= d; ++i) body += "var x" + std::to_string(i) + " 1\n";
  body += "rel x0*x1";
  Builder b{{"x0x1", "GF(p)[x0..xd]/(x0*x1)", make_ring(prime, body, "x0x1"), {}, {}, {}, false}};
  const PrimeField& F = b.R().field();
  std::vector<std::string> c0{"0"}, c1;
  for (int i = 1; i <= d; ++i) c0.push_back("t" + std::to_string(i - 1));
  c1.push_back("t0");
  c1.push_back("0");
  for (int i = 2; i <= d; ++i) c1.push_back("t" + std::to_string(i - 1));
  b.components({component(F, "x0=0", static_cast<std::size_t>(d), c0),
                component(F, "x1=0", static_cast<std::size_t>(d), c1)});
  b.basics(d == 1);
  std::vector<Polynomial> rest;
  for (int i = 1; i <= d; ++i) rest.push_back(b.p("x" + std::to_string(i)));
  b.add("M", cyclic_quotient(b.R(), rest), d == 1);
  b.add_mf("R_x0", "x0", "x1");
  b.add_mf("R_x1", "x1", "x0");
  b.entry.notes.push_back("s = x0+x1 is regular on R and on M = R/(x1..xd), and M/sM = k");
  return b.entry;
}

CatalogEntry build_an_odd(const CatalogParams& params, std::uint32_t prime) {
  reject_unknown(params, {"n"});
  const int n = int_param(params, "n", 1);
  if (n < 1 || n % 2 == 0 || n > 15) throw InputError("An-odd needs odd n with 1 <= n <= 15");
  PrimeField F(prime);
  auto i = sqrt_minus_one(F);
  if (!i) throw InputError("An-odd needs a square root of -1 in GF(p), i.e. p = 1 mod 4");
  const int h = (n + 1) / 2;
  const std::string body = n == 1 ? "var x 1\nvar y 1\nrel x^2+y^2"
                                  : "var x " + std::to_string(n + 1) + "\nvar y 2\nrel x^2+y^" + std::to_string(n + 1);
  Builder b{{"An-odd", "GF(p)[x,y]/(x^2+y^(n+1))", make_ring(prime, body, "An-odd"), {}, {}, {}, true}};
  const std::string yh = "y^" + std::to_string(h);
  const std::string th = "t0^" + std::to_string(h);
  const std::string iv = std::to_string(*i);
  b.components({component(F, "x=-i*y^h", 1, {std::to_string(F.neg(*i)) + "*" + th, "t0"}),
                component(F, "x=i*y^h", 1, {iv + "*" + th, "t0"})});
  b.basics(true);
  const std::string plus = "x" + signed_term(*i, yh, F);
  const std::string minus = "x" + signed_term(F.neg(*i), yh, F);
  b.add_mf("Rplus", plus, minus);
  b.add_mf("Rminus", minus, plus);
  b.add("Rplus_Rminus", direct_sum(b.entry.module("Rplus"), b.entry.module("Rminus")), true);
  for (int j = 1; j < h; ++j) {
    const std::string yj = "y^" + std::to_string(j);
    const std::string yc = "y^" + std::to_string(n + 1 - j);
    b.add_mf("M" + std::to_string(j), "x,-" + yj + ";" + yc + ",x", "x," + yj + ";-" + yc + ",x");
  }
  b.add("R_m2", cyclic_quotient(b.R(), power_of_maximal_ideal(b.R(), 2)));
  b.entry.notes.push_back("R+ = R/(x + i*y^h), R- = R/(x - i*y^h), i = " + iv + ", h = (n+1)/2");
  b.entry.notes.push_back("classification is complete over an algebraically closed field; the listed factorizations are already rational here");
  return b.entry;
}

CatalogEntry build_cusp(const CatalogParams& params, std::uint32_t prime) {
  reject_unknown(params, {});
  Builder b{{"cusp", "GF(p)[x,y]/(x^2+y^3), deg x = 3, deg y = 2",
             make_ring(prime, "var x 3\nvar y 2\nrel x^2+y^3", "cusp"), {}, {}, {}, true}};
  b.components({component(b.R().field(), "cusp", 1, {"t0^3", "-t0^2"})});
  b.basics(true);
  b.add("dual_m", dual(b.entry.module("m")).module, true);
  b.add_mf("N", "x,-y;y^2,x", "x,y;-y^2,x");
  b.add("R_m2", cyclic_quotient(b.R(), power_of_maximal_ideal(b.R(), 2)));
  b.add("R_y", cyclic_quotient(b.R(), {b.p("y")}));
  b.entry.notes.push_back("indecomposable totally reflexive modules: R and m (up to twist)");
  return b.entry;
}

CatalogEntry build_quadric3(const CatalogParams& params, std::uint32_t prime) {
  reject_unknown(params, {});
  Builder b{{"quadric3", "GF(p)[x,y,z]/(x^2+y^2+z^2)",
             make_ring(prime, "var x 1\nvar y 1\nvar z 1\nrel x^2+y^2+z^2", "quadric3"), {}, {}, {}, false}};
  const PrimeField& F = b.R().field();
  auto i = sqrt_minus_one(F);
  if (i) {
    const Scalar half = F.inv(2);
    const Scalar c = F.inv(F.mul(2, *i));
    const std::string hs = std::to_string(half), cs = std::to_string(c);
    b.components({component(F, "cone", 2, {hs + "*t0^2-" + hs + "*t1^2", cs + "*t0^2+" + cs + "*t1^2", "t0*t1"})});
    const std::string iv = std::to_string(*i);
    const std::string xp = "x+" + iv + "*y", xm = "x-" + iv + "*y";
    b.basics(false);
    b.add_mf("N", xp + ",-z;z," + xm, xm + ",z;-z," + xp);
  } else {
    b.basics(false);
    b.entry.notes.push_back("no square root of -1: no component data");
  }
  Resolution rk(residue_field(b.R()), kDefaultDmax);
  rk.extend_to(3);
  b.add("K2", rk.syzygy(2), true);
  b.add("dual_K2", dual(b.entry.module("K2")).module, true);
  b.add("R_m2", cyclic_quotient(b.R(), power_of_maximal_ideal(b.R(), 2)));
  return b.entry;
}

CatalogEntry build_quadric4(const CatalogParams& params, std::uint32_t prime) {
  reject_unknown(params, {});
  Builder b{{"quadric-4var", "GF(p)[x,y,z,w]/(xy-zw)",
             make_ring(prime, "var x 1\nvar y 1\nvar z 1\nvar w 1\nrel x*y-z*w", "quadric-4var"), {}, {}, {}, false}};
  b.components({component(b.R().field(), "cone", 4, {"t0*t2", "t1*t3", "t0*t3", "t1*t2"})});
  b.basics(false);
  b.add("R_p", cyclic_quotient(b.R(), {b.p("x"), b.p("z")}));
  b.add("R_q", cyclic_quotient(b.R(), {b.p("y"), b.p("w")}));
  b.add_mf("N", "x,z;w,y", "y,-z;-w,x");
  b.entry.notes.push_back("p = (x,z), q = (y,w); R/p tensor R/q = k");
  return b.entry;
}

CatalogEntry build_ci32(const CatalogParams& params, std::uint32_t prime) {
  reject_unknown(params, {});
  Builder b{{"ci-3-2", "GF(p)[x,y,z]/(x^2,y^2)",
             make_ring(prime, "var x 1\nvar y 1\nvar z 1\nrel x^2\nrel y^2", "ci-3-2"), {}, {}, {}, false}};
  b.components({component(b.R().field(), "z-axis", 1, {"0", "0", "t0"}, false)});
  b.basics(true);
  b.add("R_x", cyclic_quotient(b.R(), {b.p("x")}), true);
  b.add("R_m2", cyclic_quotient(b.R(), power_of_maximal_ideal(b.R(), 2)));
  return b.entry;
}

}  // namespace

std::vector<CatalogInfo> catalog_list() {
  return {
      {"hypersurface-dim1", "f=x^2", "GF(p)[x,y]/(f); k, m, m^t, R/m^t, m/y^2m, Hom(m,R)"},
      {"regular2", "", "GF(p)[x,y]"},
      {"xy", "", "GF(p)[x,y]/(xy); R/(x), R/(y)"},
      {"x0x1", "d=1", "GF(p)[x0..xd]/(x0*x1); M = R/(x1..xd)"},
      {"An-odd", "n=1", "GF(p)[x,y]/(x^2+y^(n+1)), weights (n+1,2) (standard for n=1); R+, R-"},
      {"cusp", "", "GF(p)[x,y]/(x^2+y^3), weights (3,2)"},
      {"quadric3", "", "GF(p)[x,y,z]/(x^2+y^2+z^2)"},
      {"quadric-4var", "", "GF(p)[x,y,z,w]/(xy-zw); R/(x,z), R/(y,w)"},
      {"ci-3-2", "", "GF(p)[x,y,z]/(x^2,y^2)"},
  };
}

CatalogEntry build(const std::string& name, const CatalogParams& params, std::uint32_t prime) {
  if (name == "hypersurface-dim1") return build_hypersurface_dim1(params, prime);
  if (name == "regular2") return build_regular2(params, prime);
  if (name == "xy") return build_xy(params, prime);
  if (name == "x0x1") return build_x0x1(params, prime);
  if (name == "An-odd") return build_an_odd(params, prime);
  if (name == "cusp") return build_cusp(params, prime);
  if (name == "quadric3") return build_quadric3(params, prime);
  if (name == "quadric-4var") return build_quadric4(params, prime);
  if (name == "ci-3-2") return build_ci32(params, prime);
  throw InputError("unknown catalog entry '" + name + "'");
}

std::optional<CatalogEntry> catalog_entry_for(const GradedRing& r) {
  std::vector<std::pair<std::string, CatalogParams>> tries;
  for (const auto& info : catalog_list()) tries.push_back({info.name, {}});
  for (int n = 3; n <= 9; n += 2) tries.push_back({"An-odd", {{"n", std::to_string(n)}}});
  for (int d = 2; d <= 4; ++d) tries.push_back({"x0x1", {{"d", std::to_string(d)}}});
  for (const auto& [name, params] : tries) {
    try {
      CatalogEntry e = build(name, params, r.field().prime());
      if (e.ring.same_as(r)) return e;
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

GradedRing attach_catalog_components(const GradedRing& r) {
  if (!r.components().empty()) return r;
  auto e = catalog_entry_for(r);
  if (!e || e->ring.components().empty()) return r;
  return r.with_components(e->ring.components());
}

namespace {

Polynomial random_form(const GradedRing& R, int d, std::mt19937_64& rng) {
  const auto& basis = R.piece(d).basis_monomials;
  std::uniform_int_distribution<Scalar> coeff(0, R.field().prime() - 1);
  Polynomial f(R.nvars(), R.field());
  while (f.is_zero() && !basis.empty()) {
    for (const auto& mu : basis) f.add_term(mu, coeff(rng));
  }
  return f;
}

}  // namespace

std::vector<Candidate> sample_modules(const CatalogEntry& entry, std::size_t count, std::uint64_t seed) {
  const GradedRing& R = entry.ring;
  std::mt19937_64 rng(seed);
  std::vector<int> degrees;
  for (int d = 1; d <= 2 * R.max_weight(); ++d)
    if (R.dim(d) > 0) degrees.push_back(d);
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  auto form = [&] { return random_form(R, degrees[pick(std::min<std::size_t>(degrees.size(), 3))], rng); };
  std::vector<Candidate> out;
  for (const auto& m : entry.modules) {
    if (out.size() >= count) break;
    out.push_back({m.name, m.module});
  }
  int attempts = 0;
  while (out.size() < count && attempts++ < 1000) {
    const std::size_t kind = pick(5);
    Candidate c{"", GradedModule::zero(R)};
    if (kind == 0) {
      Polynomial f = form();
      c = {"R/(" + f.to_string(R.names()) + ")", cyclic_quotient(R, {f})};
    } else if (kind == 1) {
      Polynomial f = form(), g = form();
      c = {"R/(" + f.to_string(R.names()) + "," + g.to_string(R.names()) + ")", cyclic_quotient(R, {f, g})};
    } else if (kind == 2) {
      Polynomial f = form();
      c = {"(" + f.to_string(R.names()) + ")", ideal_module(R, {f})};
    } else if (kind == 3) {
      const auto& a = entry.modules[pick(entry.modules.size())];
      const auto& b = entry.modules[pick(entry.modules.size())];
      c = {a.name + "+" + b.name, direct_sum(a.module, b.module)};
    } else {
      const auto& a = entry.modules[pick(entry.modules.size())];
      const int s = static_cast<int>(pick(3)) - 1;
      c = {a.name + "(" + std::to_string(s) + ")", twist(a.module, s)};
    }
    if (is_zero(c.module)) continue;
    bool dup = std::any_of(out.begin(), out.end(), [&](const Candidate& o) { return o.name == c.name; });
    if (!dup) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace gchar
