#include "gchar/gdimension.hpp"

#include <algorithm>

#include "gchar/error.hpp"

namespace gchar {

namespace {

PolyMatrix zeros(const GradedRing& R, std::size_t rows, std::size_t cols) {
  return PolyMatrix(rows, cols, R.nvars(), R.field());
}

PolyMatrix identity(const GradedRing& R, std::size_t n) { return PolyMatrix::identity(n, R.nvars(), R.field()); }

std::vector<int> negated(const std::vector<int>& v) {
  std::vector<int> out;
  for (int a : v) out.push_back(-a);
  return out;
}

Scalar constant_term(const Polynomial& p) { return p.coefficient(Monomial(p.nvars(), 0)); }

std::vector<long long> trimmed(std::vector<long long> v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

ReflexivityCertificate total_reflexivity(const GradedModule& m, int dmax) {
  ReflexivityCertificate cert;
  GradedModule pm = minimal_presentation(m);
  const GradedRing& R = pm.ring();
  HomResult d1 = dual(pm, dmax);
  HomResult d2 = dual(d1.module, dmax);
  GradedModule ambient = GradedModule::free(R, negated(d1.embedding.degrees));
  PolyMatrix theta = zeros(R, d2.module.num_generators(), pm.num_generators());
  for (std::size_t i = 0; i < pm.num_generators(); ++i) {
    Column row(d1.embedding.size(), R.zero());
    for (std::size_t l = 0; l < d1.embedding.size(); ++l) row[l] = d1.embedding.columns(i, l);
    auto c = express(ambient, d2.embedding, row, pm.degrees()[i]);
    if (!c) throw ConsistencyError("biduality: evaluation is not a homomorphism of the dual");
    for (std::size_t q = 0; q < c->size(); ++q) theta(q, i) = (*c)[q];
  }
  ModuleMap th{pm, d2.module, theta};
  cert.biduality_injective = is_injective(th, dmax);
  cert.biduality_surjective = is_surjective(th);
  Resolution rm(pm, dmax);
  Resolution rd(d1.module, dmax);
  for (int i = 1; i <= R.krull_dim(); ++i) {
    if (cert.nonvanishing_ext < 0 && !ext_against_ring_vanishes(rm, i)) cert.nonvanishing_ext = i;
    if (cert.nonvanishing_dual_ext < 0 && !ext_against_ring_vanishes(rd, i)) cert.nonvanishing_dual_ext = i;
  }
  cert.totally_reflexive = cert.biduality_injective && cert.biduality_surjective && cert.nonvanishing_ext < 0 &&
                           cert.nonvanishing_dual_ext < 0;
  return cert;
}

bool is_totally_reflexive(const GradedModule& m, int dmax) { return total_reflexivity(m, dmax).totally_reflexive; }

int gdim(const GradedModule& m, int dmax) {
  GradedModule pm = minimal_presentation(m);
  if (pm.num_generators() == 0) return 0;
  Resolution res(pm, dmax);
  int t = 0;
  for (int i = 1; i <= pm.ring().krull_dim(); ++i)
    if (!ext_against_ring_vanishes(res, i)) t = i;
  const int ab = ring_depth(pm.ring()) - depth(pm, dmax);
  if (ab != t) {
    throw ConsistencyError("G-dimension " + std::to_string(t) + " disagrees with depth R - depth M = " +
                           std::to_string(ab));
  }
  return t;
}

Cosyzygy cosyzygy(const GradedModule& g, int dmax, bool certify) {
  GradedModule pg = minimal_presentation(g);
  const GradedRing& R = pg.ring();
  if (certify && !is_totally_reflexive(pg, dmax)) throw PreconditionError("cosyzygy: module is not totally reflexive");
  HomResult d = dual(pg, dmax);
  Cosyzygy c{d.embedding.size(), negated(d.embedding.degrees), d.embedding.columns.transpose(),
             GradedModule::zero(R)};
  c.cokernel = GradedModule(R, c.degrees, c.embedding);
  if (certify) {
    if (!is_injective({pg, GradedModule::free(R, c.degrees), c.embedding}, dmax))
      throw ConsistencyError("cosyzygy: embedding into the free module is not injective");
    if (!is_totally_reflexive(c.cokernel, dmax)) throw ConsistencyError("cosyzygy: cokernel is not totally reflexive");
  }
  return c;
}

namespace {

void minimize(GApproximation& a, int dmax) {
  const GradedRing& R = a.g.ring();
  while (a.k.num_generators() > 0) {
    HomResult dg = dual(a.g, dmax);
    Matrix b = evaluation_pairing(dg, Generators{a.iota, a.k.degrees()});
    Echelon e = rref(b);
    if (e.rank() == 0) break;
    Generators split{a.iota.select_columns(e.pivots), {}};
    for (auto k : e.pivots) split.degrees.push_back(a.k.degrees()[k]);
    Generators kill{identity(R, a.k.num_generators()).select_columns(e.pivots), split.degrees};
    Pruned pg = prune(quotient(a.g, split));
    a.g = pg.module;
    a.pi = a.pi.select_columns(pg.kept);
    a.iota = normalize(R, pg.tau * a.iota);
    Pruned pk = prune(quotient(a.k, kill));
    a.k = pk.module;
    a.iota = a.iota.select_columns(pk.kept);
  }
  a.minimal = true;
}

}  // namespace

GApproximation g_approximation(const GradedModule& m, int dmax) {
  GradedModule pm = minimal_presentation(m);
  const GradedRing& R = pm.ring();
  const int t = gdim(pm, dmax);
  Resolution res(pm, dmax);
  res.extend_to(t + 1);

  GradedModule x = res.syzygy(t);
  PolyMatrix psi = identity(R, x.num_generators());
  GradedModule k = GradedModule::zero(R);
  PolyMatrix kappa = zeros(R, x.num_generators(), 0);
  for (int j = t - 1; j >= 0; --j) {
    const auto& fj = res.degrees(j);
    PolyMatrix u = normalize(R, res.differential(j + 1) * psi);
    Cosyzygy c = cosyzygy(x, dmax, false);
    std::vector<int> degs = fj;
    degs.insert(degs.end(), c.degrees.begin(), c.degrees.end());
    GradedModule p(R, degs, PolyMatrix::vstack(u, c.embedding.negated()));
    PolyMatrix psi_new = PolyMatrix::hstack(identity(R, fj.size()), zeros(R, fj.size(), c.b));
    GradedModule k_new(R, c.degrees, normalize(R, c.embedding * kappa));
    PolyMatrix kappa_new = PolyMatrix::vstack(zeros(R, fj.size(), c.b), identity(R, c.b));

    Pruned pp = prune(p);
    x = pp.module;
    psi = psi_new.select_columns(pp.kept);
    kappa = normalize(R, pp.tau * kappa_new);
    Pruned pk = prune(k_new);
    k = pk.module;
    kappa = kappa.select_columns(pk.kept);
  }
  GApproximation a{pm, x, k, kappa, psi, t, false};
  minimize(a, dmax);
  certify(a, dmax);
  return a;
}

void certify(const GApproximation& a, int dmax) {
  if (!is_totally_reflexive(a.g, dmax)) throw ConsistencyError("G-approximation: middle term is not totally reflexive");
  if (!pdim(a.k, dmax).finite()) throw ConsistencyError("G-approximation: kernel has infinite projective dimension");
  ModuleMap iota{a.k, a.g, a.iota};
  ModuleMap pi{a.g, a.m, a.pi};
  if (!is_well_defined(iota) || !is_well_defined(pi)) throw ConsistencyError("G-approximation: maps not well defined");
  if (!is_injective(iota, dmax)) throw ConsistencyError("G-approximation: K -> G is not injective");
  if (!is_surjective(pi)) throw ConsistencyError("G-approximation: G -> M is not surjective");
  if (!is_zero_map(compose(pi, iota))) throw ConsistencyError("G-approximation: composite K -> M is nonzero");
  Generators ker = kernel_of(pi, dmax);
  Generators img{a.iota, a.k.degrees()};
  for (std::size_t j = 0; j < ker.size(); ++j) {
    if (!in_submodule(a.g, img, ker.columns.column(j), ker.degrees[j]))
      throw ConsistencyError("G-approximation: not exact at G");
  }
}

long long GBetti::chi(int i) const {
  long long s = 0;
  for (int n = std::max(i, 0); n < static_cast<int>(values.size()); ++n)
    s += ((n - i) % 2 == 0 ? 1 : -1) * values[static_cast<std::size_t>(n)];
  return s;
}

ChainComplex StrictResolution::augmented() const { return augment(complex, target, augmentation); }

namespace {

struct StrictParts {
  StrictResolution strict;
  Resolution k_res;
};

StrictParts build_strict(const GApproximation& a, int dmax) {
  const GradedRing& R = a.g.ring();
  Resolution rk(a.k, dmax);
  if (rk.module().num_generators() != a.k.num_generators())
    throw ConsistencyError("strict resolution: kernel of the G-approximation is not minimally presented");
  PdimVerdict v = pdim(rk);
  if (!v.finite()) throw ConsistencyError("strict resolution: kernel has infinite projective dimension");
  rk.extend_to(v.value + 1);
  ChainComplex c(R);
  c.set_slot(0, a.g);
  if (a.k.num_generators() > 0) {
    for (int n = 0; n <= v.value; ++n) c.set_slot(n + 1, GradedModule::free(R, rk.degrees(n)));
    c.set_differential(1, a.iota);
    for (int n = 1; n <= v.value; ++n) c.set_differential(n + 1, rk.differential(n));
  }
  return {StrictResolution{c, a.m, a.pi}, rk};
}

}  // namespace

std::vector<long long> hom_to_residue_ranks(const ChainComplex& c) {
  std::vector<long long> out;
  if (c.empty()) return out;
  auto const_rank = [&](int n) -> long long {
    if (!c.has_slot(n) || !c.has_slot(n - 1)) return 0;
    PolyMatrix d = c.differential(n);
    Matrix a(d.rows(), d.cols(), c.ring().field());
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t q = 0; q < d.cols(); ++q) a(r, q) = constant_term(d(r, q));
    return static_cast<long long>(gchar::rank(a));
  };
  for (int n = 0; n <= c.max_index(); ++n) {
    const long long g = static_cast<long long>(c.slot(n).num_generators());
    out.push_back(g - const_rank(n) - const_rank(n + 1));
  }
  return out;
}

long long alternating_beta0(const ChainComplex& c) {
  long long s = 0;
  for (int n : c.indices())
    if (n >= 0) s += (n % 2 == 0 ? 1 : -1) * static_cast<long long>(beta0(c.slot(n)));
  return s;
}

GBetti g_betti(const GApproximation& a, int dmax) {
  StrictParts sp = build_strict(a, dmax);
  const Resolution& rk = sp.k_res;
  GBetti out;
  const auto b0m = static_cast<long long>(a.m.num_generators());
  const auto b0g = static_cast<long long>(a.g.num_generators());
  const auto b0k = static_cast<long long>(a.k.num_generators());
  out.values.push_back(b0m);
  if (a.gdim >= 1) out.values.push_back(b0m - b0g + b0k);
  for (int n = 2; n <= a.gdim; ++n) out.values.push_back(rk.beta(n - 1));
  if (a.gdim == 0 && b0m - b0g + b0k != 0)
    throw ConsistencyError("relative Betti number beyond the G-dimension is nonzero");
  for (int n = std::max(a.gdim, 1); n <= rk.stages(); ++n) {
    if (rk.beta(n) != 0) throw ConsistencyError("kernel of the G-approximation has projective dimension >= G-dim");
  }
  std::vector<long long> via_hom = trimmed(hom_to_residue_ranks(sp.strict.complex));
  if (via_hom != trimmed(out.values)) throw ConsistencyError("relative Betti numbers disagree with Hom(G, k)");
  return out;
}

GBetti g_betti(const GradedModule& m, int dmax) { return g_betti(g_approximation(m, dmax), dmax); }

long long chi_g(const GradedModule& m, int i, int dmax) { return g_betti(m, dmax).chi(i); }

StrictResolution strict_resolution(const GApproximation& a, int dmax) { return build_strict(a, dmax).strict; }

StrictResolution strict_resolution(const GradedModule& m, int dmax) {
  return strict_resolution(g_approximation(m, dmax), dmax);
}

ChainComplex hom_into(const GradedModule& h, const ChainComplex& c, int dmax) {
  const GradedRing& R = c.ring();
  ChainComplex out(R);
  std::map<int, HomResult> homs;
  for (int n : c.indices()) {
    homs.emplace(n, hom(h, c.slot(n), dmax));
    out.set_slot(n, homs.at(n).module);
  }
  for (int n : c.indices()) {
    if (!c.has_slot(n - 1)) continue;
    const HomResult& from = homs.at(n);
    const HomResult& to = homs.at(n - 1);
    std::vector<GradedModule> parts;
    for (int a : h.degrees()) parts.push_back(twist(c.slot(n - 1), a));
    GradedModule ambient = direct_sum(parts, R);
    PolyMatrix lift = PolyMatrix::kronecker(identity(R, h.num_generators()), c.differential(n));
    PolyMatrix d = zeros(R, to.module.num_generators(), from.module.num_generators());
    for (std::size_t g = 0; g < from.embedding.size(); ++g) {
      PolyMatrix img = normalize(R, lift * from.embedding.columns.select_columns({g}));
      auto coeffs = express(ambient, to.embedding, img.column(0), from.embedding.degrees[g]);
      if (!coeffs) throw ConsistencyError("hom_into: induced map leaves Hom");
      for (std::size_t r = 0; r < coeffs->size(); ++r) d(r, g) = (*coeffs)[r];
    }
    out.set_differential(n, d);
  }
  return out;
}

PropernessReport properness_test(const ChainComplex& resolution, const std::vector<GradedModule>& witnesses,
                                 int dmax) {
  std::string why;
  if (!resolution.is_valid(&why)) throw InputError("not a G-resolution: " + why);
  if (!resolution.has_slot(-1)) throw InputError("not a G-resolution: missing augmentation slot -1");
  for (int n : resolution.indices()) {
    if (n >= 0 && !is_totally_reflexive(resolution.slot(n), dmax))
      throw InputError("not a G-resolution: slot " + std::to_string(n) + " is not totally reflexive");
  }
  if (!is_exact(resolution, dmax)) throw InputError("not a G-resolution: augmented complex is not exact");
  PropernessReport rep;
  rep.alternating_sum = alternating_beta0(resolution);
  rep.chi_g = chi_g(resolution.slot(-1), 0, dmax);
  if (rep.alternating_sum != rep.chi_g) return rep;
  for (const auto& w : witnesses) {
    if (!is_totally_reflexive(w, dmax)) throw InputError("witness " + w.label() + " is not totally reflexive");
    if (!is_exact(hom_into(w, resolution, dmax), dmax)) return rep;
    rep.witnesses_passed.push_back(w.label());
  }
  rep.verdict = Properness::proper_relative_to_witnesses;
  return rep;
}

TorG tor_g(const GradedModule& m, const GradedModule& n, int dmax) {
  if (!length(tensor(minimal_presentation(m), n), dmax).finite)
    throw PreconditionError("M tensor N has no finite-length certificate");
  StrictResolution sr = strict_resolution(m, dmax);
  ChainComplex t = tensor(sr.complex, n);
  TorG out;
  for (int i = 0; i <= t.max_index(); ++i) {
    GradedModule h = homology(t, i, dmax);
    auto l = length(h, dmax);
    if (!l.finite) throw ConsistencyError("relative Tor " + std::to_string(i) + " has no finite-length certificate");
    out.modules.push_back(h);
    out.lengths.push_back(l.length);
    out.chi += (i % 2 == 0 ? 1 : -1) * l.length;
  }
  return out;
}

long long chi_g_pair(const GradedModule& m, const GradedModule& n, int dmax) { return tor_g(m, n, dmax).chi; }

GradedModule base_change(const GradedModule& m, const GradedRing& quotient_ring) {
  if (quotient_ring.nvars() != m.ring().nvars()) throw InputError("base change to a ring in other variables");
  return GradedModule(quotient_ring, m.degrees(), m.relations(), m.label());
}

bool is_regular_on(const GradedModule& m, const Polynomial& s, int dmax) {
  GradedModule pm = minimal_presentation(m);
  const GradedRing& R = pm.ring();
  if (!s.is_homogeneous(R.weights()) || s.is_zero()) return false;
  const int e = s.degree(R.weights());
  PolyMatrix mult = identity(R, pm.num_generators());
  for (std::size_t i = 0; i < pm.num_generators(); ++i) mult(i, i) = s;
  return is_injective({twist(pm, -e), pm, normalize(R, mult)}, dmax);
}

RegularQuotientReport quotient_by_regular(const GradedModule& m, const Polynomial& s, int dmax) {
  GradedModule pm = minimal_presentation(m);
  const GradedRing& R = pm.ring();
  (void)R.quotient(s);  // throws unless s is R-regular
  if (!is_totally_reflexive(pm, dmax)) throw PreconditionError("quotient-regular: module is not totally reflexive");
  const int e = s.degree(R.weights());
  const std::size_t n0 = pm.num_generators();
  const std::size_t n1 = pm.relations().cols();
  Cosyzygy c = cosyzygy(pm, dmax, false);

  std::vector<int> top;
  for (int d : c.degrees) top.push_back(d + e);
  std::vector<int> degs = top;
  degs.insert(degs.end(), pm.degrees().begin(), pm.degrees().end());
  PolyMatrix sI = identity(R, n0);
  for (std::size_t i = 0; i < n0; ++i) sI(i, i) = s;
  PolyMatrix d1 = PolyMatrix::vstack(PolyMatrix::hstack(c.embedding.negated(), zeros(R, c.b, n1)),
                                     PolyMatrix::hstack(sI, pm.relations()));
  GradedModule cone_coker(R, degs, normalize(R, d1));
  GradedModule msm(R, pm.degrees(), PolyMatrix::hstack(pm.relations(), normalize(R, sI)));

  PolyMatrix iota = PolyMatrix::vstack(identity(R, c.b), zeros(R, n0, c.b));
  PolyMatrix pi = PolyMatrix::hstack(zeros(R, n0, c.b), identity(R, n0));
  Pruned pg = prune(cone_coker);
  GApproximation a{msm, pg.module, GradedModule::free(R, top), normalize(R, pg.tau * iota), pi.select_columns(pg.kept),
                   gdim(msm, dmax), false};
  certify(a, dmax);

  RegularQuotientReport rep;
  rep.b = c.b;
  rep.chi_g_quotient_cone = g_betti(a, dmax).chi(0);
  if (rep.chi_g_quotient_cone != static_cast<long long>(a.g.num_generators()) - static_cast<long long>(c.b))
    throw ConsistencyError("quotient-regular: cone count disagrees with the relative Betti numbers");
  rep.chi_g_quotient_engine = chi_g(msm, 0, dmax);
  rep.chi_g_m = chi_g(pm, 0, dmax);
  rep.f_rank = static_cast<long long>(f_rank(pm, dmax).f_rank);
  rep.holds = rep.chi_g_quotient_cone == rep.chi_g_quotient_engine &&
              rep.chi_g_quotient_cone == rep.chi_g_m - rep.f_rank;
  return rep;
}

BaseChangeReport base_change_betti(const GradedModule& m, const Polynomial& s, int dmax) {
  GradedModule pm = minimal_presentation(m);
  GradedRing S = pm.ring().quotient(s);
  if (!is_regular_on(pm, s, dmax)) throw PreconditionError("base change: element is not regular on the module");
  BaseChangeReport rep;
  rep.over_r = g_betti(pm, dmax);
  rep.over_quotient = g_betti(base_change(pm, S), dmax);
  rep.equal = trimmed(rep.over_r.values) == trimmed(rep.over_quotient.values);
  return rep;
}

bool MatrixFactorization::is_valid() const {
  const std::size_t n = phi.rows();
  if (phi.cols() != n || psi.rows() != n || psi.cols() != n) return false;
  PolyMatrix fi = PolyMatrix::identity(n, f.nvars(), f.field());
  for (std::size_t i = 0; i < n; ++i) fi(i, i) = f;
  auto eq = [&](const PolyMatrix& a) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!(a(i, j) == fi(i, j))) return false;
    return true;
  };
  return eq(phi * psi) && eq(psi * phi);
}

bool MatrixFactorization::is_reduced() const {
  for (const PolyMatrix* m : {&phi, &psi})
    for (std::size_t i = 0; i < m->rows(); ++i)
      for (std::size_t j = 0; j < m->cols(); ++j)
        if (constant_term((*m)(i, j)) != 0) return false;
  return true;
}

Analysis analyze(const GradedModule& m, const RankOptions& opts) {
  const int dmax = opts.dmax;
  GradedModule pm = minimal_presentation(m);
  Analysis out;
  GApproximation a = g_approximation(pm, dmax);
  out.gdim = a.gdim;
  out.pdim = pdim(pm, dmax);
  out.g_betti = g_betti(a, dmax);
  out.beta0 = static_cast<long long>(pm.num_generators());
  out.f_rank = f_rank(pm, dmax).f_rank;
  try {
    RankResult r = rank(pm, opts);
    out.rank = r.value;
    if (!r.value) out.rank_status = "undefined: " + r.reason;
    else if (r.method == "chi") out.rank_status = "exact";
    else out.rank_status = "probabilistic(seed=" + std::to_string(opts.seed) + ")";
  } catch (const UnsupportedError& e) {
    out.rank_status = std::string("unsupported: ") + e.what();
  }
  return out;
}

EpsilonTau epsilon_tau(const std::vector<Candidate>& family, int i, const RankOptions& opts) {
  if (family.empty()) throw PreconditionError("epsilon/tau: empty candidate family");
  EpsilonTau out;
  for (const auto& c : family) {
    Analysis a = analyze(c.module, opts);
    if (a.gdim > i || a.pdim.finite()) continue;
    ++out.considered;
    const long long chi = a.g_betti.chi(0);
    if (!out.epsilon || chi < *out.epsilon) {
      out.epsilon = chi;
      out.epsilon_witness = c.name;
    }
    if (a.rank && (!out.tau || chi - *a.rank < *out.tau)) {
      out.tau = chi - *a.rank;
      out.tau_witness = c.name;
    }
  }
  return out;
}

}  // namespace gchar
