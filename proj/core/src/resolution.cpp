#include "gchar/resolution.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>

#include "gchar/error.hpp"
#include "gchar/extension_field.hpp"

namespace gchar {

long long BettiTable::at(int n, int d) const {
  auto it = entries.find({n, d});
  return it == entries.end() ? 0 : it->second;
}

long long BettiTable::total(int n) const {
  long long s = 0;
  for (const auto& [key, v] : entries)
    if (key.first == n) s += v;
  return s;
}

std::vector<long long> BettiTable::totals() const {
  std::vector<long long> out;
  for (int n = 0; n <= stages; ++n) out.push_back(total(n));
  return out;
}

std::string BettiTable::to_string() const {
  std::ostringstream os;
  for (int n = 0; n <= stages; ++n) {
    os << n << ":";
    for (const auto& [key, v] : entries)
      if (key.first == n) os << " " << v << "@" << key.second;
    os << "\n";
  }
  return os.str();
}

Resolution::Resolution(GradedModule module, int dmax) : module_(minimal_presentation(module)), dmax_(dmax) {
  degrees_.push_back(module_.degrees());
  diffs_.emplace_back();
  if (degrees_[0].empty()) terminated_ = true;
}

void Resolution::extend_to(int n) {
  const GradedRing& R = ring();
  while (stages() < n) {
    const int s = stages() + 1;
    if (terminated_) {
      degrees_.emplace_back();
      diffs_.emplace_back(0, degrees_[s - 1].size(), R.nvars(), R.field());
      continue;
    }
    PolyMatrix d;
    std::vector<int> degs;
    if (s == 1) {
      d = module_.relations();
      degs = module_.relation_degrees();
    } else {
      GradedModule target = GradedModule::free(R, degrees_[s - 2]);
      Generators k;
      try {
        k = kernel(target, degrees_[s - 1], diffs_[s - 1], dmax_);
      } catch (const TruncationError& e) {
        throw TruncationError("resolution stage " + std::to_string(s) + ": " + e.what(), e.first_uncertified());
      }
      d = k.columns;
      degs = k.degrees;
    }
    if (degs.empty()) terminated_ = true;
    degrees_.push_back(std::move(degs));
    diffs_.push_back(std::move(d));
  }
}

const std::vector<int>& Resolution::degrees(int n) const {
  if (n < 0 || n > stages()) {
    if (n > stages() && terminated_) return empty_;
    if (n < 0) return empty_;
    throw PreconditionError("resolution stage " + std::to_string(n) + " not computed");
  }
  return degrees_[static_cast<std::size_t>(n)];
}

const PolyMatrix& Resolution::differential(int n) const {
  if (n < 1 || n > stages()) throw PreconditionError("differential " + std::to_string(n) + " not computed");
  return diffs_[static_cast<std::size_t>(n)];
}

long long Resolution::beta(int n) const { return static_cast<long long>(degrees(n).size()); }

std::vector<long long> Resolution::betti(int upto) const {
  std::vector<long long> out;
  for (int n = 0; n <= upto; ++n) out.push_back(beta(n));
  return out;
}

BettiTable Resolution::table() const {
  BettiTable t;
  t.stages = stages();
  t.dmax = dmax_;
  for (int n = 0; n <= stages(); ++n)
    for (int d : degrees_[static_cast<std::size_t>(n)]) ++t.entries[{n, d}];
  return t;
}

ChainComplex Resolution::complex(int n) const {
  ChainComplex c(ring());
  for (int i = 0; i <= n; ++i) c.set_slot(i, GradedModule::free(ring(), degrees(i)));
  for (int i = 1; i <= n; ++i) c.set_differential(i, differential(i));
  return c;
}

GradedModule Resolution::syzygy(int i) const {
  if (i == 0) return module_;
  return GradedModule(ring(), degrees(i), differential(i + 1));
}

bool Resolution::is_minimal() const {
  for (int n = 1; n <= stages(); ++n) {
    const PolyMatrix& d = diffs_[static_cast<std::size_t>(n)];
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c)
        if (d(r, c).coefficient(Monomial(ring().nvars(), 0)) != 0) return false;
  }
  return true;
}

Resolution minimal_resolution(const GradedModule& m, int hmax, int dmax) {
  Resolution r(m, dmax);
  r.extend_to(hmax);
  return r;
}

PdimVerdict pdim(const Resolution& res) {
  const int need = ring_depth(res.ring()) + 1;
  Resolution copy = res;
  copy.extend_to(need);
  PdimVerdict v;
  if (copy.beta(need) != 0) return v;
  v.kind = PdimKind::finite;
  v.value = -1;
  for (int n = 0; n < need; ++n)
    if (copy.beta(n) != 0) v.value = n;
  if (v.value < 0) v.value = 0;  // the zero module
  return v;
}

PdimVerdict pdim(const GradedModule& m, int dmax) { return pdim(Resolution(m, dmax)); }

namespace {

// Hom(F_i, N) realized as the direct sum of N(a_j) over generators of F_i.
GradedModule hom_free_into(const GradedRing& R, const std::vector<int>& free_degrees, const GradedModule& n) {
  std::vector<GradedModule> parts;
  for (int a : free_degrees) parts.push_back(twist(n, a));
  return direct_sum(parts, R);
}

struct Cohomology {
  GradedModule quotient_ambient;  // Hom(F_i, N) / im
  Generators cycles;
};

// H^i of Hom(F, N) through cycles and the quotient by boundaries.
Cohomology hom_cohomology(const Resolution& res, const GradedModule& n, int i) {
  const GradedRing& R = res.ring();
  const std::size_t ng = n.num_generators();
  const auto& fi = res.degrees(i);
  GradedModule slot = hom_free_into(R, fi, n);
  std::vector<int> slot_degs = slot.degrees();

  Generators cycles;
  const auto& fnext = res.degrees(i + 1);
  if (fnext.empty() || slot_degs.empty()) {
    cycles = Generators{PolyMatrix::identity(slot_degs.size(), R.nvars(), R.field()), slot_degs};
  } else {
    GradedModule next = hom_free_into(R, fnext, n);
    PolyMatrix delta = PolyMatrix::kronecker(res.differential(i + 1).transpose(),
                                             PolyMatrix::identity(ng, R.nvars(), R.field()));
    cycles = kernel(next, slot_degs, delta, res.dmax());
  }
  GradedModule ambient = slot;
  if (i >= 1 && !res.degrees(i - 1).empty() && !slot_degs.empty()) {
    PolyMatrix delta_in = PolyMatrix::kronecker(res.differential(i).transpose(),
                                                PolyMatrix::identity(ng, R.nvars(), R.field()));
    std::vector<int> prev_degs = hom_free_into(R, res.degrees(i - 1), n).degrees();
    ambient = quotient(slot, Generators{delta_in, prev_degs});
  }
  return {ambient, cycles};
}

bool cohomology_vanishes(const Cohomology& h) {
  for (std::size_t j = 0; j < h.cycles.size(); ++j) {
    if (!h.quotient_ambient.is_zero_element(h.cycles.columns.column(j), h.cycles.degrees[j])) return false;
  }
  return true;
}

}  // namespace

GradedModule ext_against_ring(Resolution& res, int i) {
  if (i < 0) return GradedModule::zero(res.ring());
  res.extend_to(i + 1);
  Cohomology h = hom_cohomology(res, ring_module(res.ring()), i);
  return prune(submodule(h.quotient_ambient, h.cycles, res.dmax())).module;
}

bool ext_against_ring_vanishes(Resolution& res, int i) {
  if (i < 0) return true;
  res.extend_to(i + 1);
  return cohomology_vanishes(hom_cohomology(res, ring_module(res.ring()), i));
}

const Resolution& residue_field_resolution(const GradedRing& ring, int stages, int dmax) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, int>, std::shared_ptr<Resolution>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{ring.id(), dmax}];
  if (!slot) slot = std::make_shared<Resolution>(residue_field(ring), dmax);
  slot->extend_to(stages);
  return *slot;
}

bool ext_from_residue_vanishes(const GradedModule& m, int i, int dmax) {
  if (i < 0) return true;
  const Resolution& k = residue_field_resolution(m.ring(), i + 1, dmax);
  return cohomology_vanishes(hom_cohomology(k, m, i));
}

int depth(const GradedModule& m, int dmax) {
  if (is_zero(m)) throw PreconditionError("depth of the zero module is undefined");
  const int top = m.ring().krull_dim();
  for (int i = 0; i <= top; ++i) {
    if (!ext_from_residue_vanishes(m, i, dmax)) return i;
  }
  throw ConsistencyError("depth exceeds the Krull dimension of the ring");
}

long long chi_classical(const Resolution& res, int i) {
  PdimVerdict v = pdim(res);
  if (!v.finite()) throw PreconditionError("chi undefined: projective dimension is infinite");
  Resolution copy = res;
  copy.extend_to(v.value);
  long long s = 0;
  for (int n = std::max(i, 0); n <= v.value; ++n) s += ((n - i) % 2 == 0 ? 1 : -1) * copy.beta(n);
  return s;
}

long long chi_classical(const GradedModule& m, int i, int dmax) { return chi_classical(Resolution(m, dmax), i); }

namespace {

Polynomial determinant(const PolyMatrix& a, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  const std::size_t n = rows.size();
  if (n == 1) return a(rows[0], cols[0]);
  Polynomial acc(a.nvars(), a.field());
  std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
  for (std::size_t c = 0; c < n; ++c) {
    const auto& e = a(rows[0], cols[c]);
    if (e.is_zero()) continue;
    std::vector<std::size_t> sub = cols;
    sub.erase(sub.begin() + static_cast<long>(c));
    Polynomial t = e * determinant(a, rest, sub);
    if (c % 2 == 0) acc += t;
    else acc -= t;
  }
  return acc;
}

// Calls f on each k-subset of {0..n-1}; stops early when f returns false.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return true;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!f(idx)) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

bool all_minors_vanish(const GradedRing& R, const PolyMatrix& a, std::size_t size) {
  if (size > a.rows() || size > a.cols()) return true;
  if (binomial(a.rows(), size) * binomial(a.cols(), size) > 200000)
    throw UnsupportedError("rank: too many minors to check on a nonreduced component");
  return for_each_subset(a.rows(), size, [&](const std::vector<std::size_t>& rows) {
    return for_each_subset(a.cols(), size, [&](const std::vector<std::size_t>& cols) {
      return R.is_zero(determinant(a, rows, cols));
    });
  });
}

}  // namespace

RankResult rank(const GradedModule& m, const RankOptions& opts) {
  RankResult out;
  Resolution res(m, opts.dmax);
  if (pdim(res).finite()) {
    out.method = "chi";
    out.value = chi_classical(res, 0);
    return out;
  }
  const GradedRing& R = m.ring();
  if (R.components().empty())
    throw UnsupportedError("rank: projective dimension is infinite and the ring has no component data");
  out.method = "components";
  const GradedModule& pm = res.module();
  const PolyMatrix& p = pm.relations();
  const std::size_t ngens = pm.num_generators();
  ExtensionField ext(R.field(), opts.extension_degree);
  std::mt19937_64 rng(opts.seed);
  for (const auto& comp : R.components()) {
    std::size_t rho = 0;
    for (int trial = 0; trial < opts.trials; ++trial) {
      std::vector<ExtensionField::Elem> t;
      for (std::size_t j = 0; j < comp.nparams; ++j) t.push_back(ext.random(rng));
      std::vector<ExtensionField::Elem> x;
      for (const auto& f : comp.parametrization) x.push_back(ext.evaluate(f, t));
      std::vector<std::vector<ExtensionField::Elem>> rows(p.rows(), std::vector<ExtensionField::Elem>(p.cols()));
      for (std::size_t r = 0; r < p.rows(); ++r)
        for (std::size_t c = 0; c < p.cols(); ++c) rows[r][c] = ext.evaluate(p(r, c), x);
      rho = std::max(rho, gchar::rank(ext, rows));
    }
    if (!comp.reduced && !all_minors_vanish(R, p, rho + 1)) {
      out.reason = "not free at the generic point of the nonreduced component " + comp.name;
      out.per_component.push_back(-1);
      continue;
    }
    out.per_component.push_back(static_cast<long long>(ngens - rho));
  }
  const long long first = out.per_component.front();
  for (long long r : out.per_component) {
    if (r < 0) return out;
    if (r != first) {
      out.reason = "ranks differ across components";
      return out;
    }
  }
  out.value = first;
  return out;
}

FreeSummand f_rank(const GradedModule& m, int dmax) {
  GradedModule pm = minimal_presentation(m);
  const GradedRing& R = pm.ring();
  FreeSummand out{0, pm, {}};
  if (pm.num_generators() == 0) return out;
  HomResult d = dual(pm, dmax);
  Generators units{PolyMatrix::identity(pm.num_generators(), R.nvars(), R.field()), pm.degrees()};
  Matrix b = evaluation_pairing(d, units);
  Echelon e = rref(b);
  out.f_rank = e.rank();
  out.split_generators = e.pivots;
  if (out.f_rank == 0) return out;
  Generators split{units.columns.select_columns(e.pivots), {}};
  for (auto i : e.pivots) split.degrees.push_back(pm.degrees()[i]);
  out.complement = minimal_presentation(quotient(pm, split));
  return out;
}

}  // namespace gchar
