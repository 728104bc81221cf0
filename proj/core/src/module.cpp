#include "gchar/module.hpp"

#include <algorithm>
#include <numeric>

#include "gchar/error.hpp"

namespace gchar {

namespace {

Monomial one_monomial(const GradedRing& r) { return Monomial(r.nvars(), 0); }

Scalar constant_coefficient(const Polynomial& p) {
  if (p.is_zero()) return 0;
  return p.coefficient(Monomial(p.nvars(), 0));
}

}  // namespace

PolyMatrix normalize(const GradedRing& ring, const PolyMatrix& m) {
  PolyMatrix out(m.rows(), m.cols(), ring.nvars(), ring.field());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = ring.normal_form(m(r, c));
  return out;
}

Column normalize(const GradedRing& ring, const Column& c) {
  Column out;
  out.reserve(c.size());
  for (const auto& p : c) out.push_back(ring.normal_form(p));
  return out;
}

GradedModule::GradedModule(GradedRing ring, std::vector<int> gen_degrees, PolyMatrix relations, std::string label)
    : ring_(std::move(ring)), degrees_(std::move(gen_degrees)), label_(std::move(label)), cache_(std::make_shared<Cache>()) {
  if (relations.cols() == 0) {
    relations_ = PolyMatrix(degrees_.size(), 0, ring_.nvars(), ring_.field());
    return;
  }
  if (relations.rows() != degrees_.size()) throw InputError("presentation has the wrong number of rows");
  PolyMatrix norm = normalize(ring_, relations);
  relations_ = PolyMatrix(degrees_.size(), 0, ring_.nvars(), ring_.field());
  for (std::size_t j = 0; j < norm.cols(); ++j) {
    Column col = norm.column(j);
    auto deg = column_degree(col);
    if (!deg) continue;
    relations_.append_column(col);
    relation_degrees_.push_back(*deg);
  }
}

GradedModule GradedModule::free(const GradedRing& ring, std::vector<int> degrees, std::string label) {
  return GradedModule(ring, std::move(degrees), PolyMatrix(), std::move(label));
}

GradedModule GradedModule::zero(const GradedRing& ring) { return free(ring, {}, "0"); }

GradedModule GradedModule::relabeled(std::string label) const {
  GradedModule out = *this;
  out.label_ = std::move(label);
  return out;
}

int GradedModule::min_degree() const {
  if (degrees_.empty()) return 0;
  return *std::min_element(degrees_.begin(), degrees_.end());
}

int GradedModule::max_degree() const {
  if (degrees_.empty()) return 0;
  return *std::max_element(degrees_.begin(), degrees_.end());
}

std::optional<int> GradedModule::column_degree(const Column& col) const {
  if (col.size() != degrees_.size()) throw InputError("column has the wrong length for this module");
  std::optional<int> deg;
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (col[i].is_zero()) continue;
    if (!col[i].is_homogeneous(ring_.weights())) throw InputError("inhomogeneous module element");
    const int d = col[i].degree(ring_.weights()) + degrees_[i];
    if (deg && *deg != d) throw InputError("module element is not homogeneous");
    deg = d;
  }
  return deg;
}

const ModulePiece& GradedModule::piece(int d) const {
  std::lock_guard lock(cache_->mutex);
  auto it = cache_->pieces.find(d);
  if (it != cache_->pieces.end()) return *it->second;
  auto p = std::make_unique<ModulePiece>();
  p->degree = d;
  std::size_t off = 0;
  for (int a : degrees_) {
    p->offsets.push_back(off);
    off += ring_.dim(d - a);
  }
  p->free_dim = off;
  p->relations = Reducer(off, ring_.field());
  for (std::size_t j = 0; j < relations_.cols(); ++j) {
    const int e = d - relation_degrees_[j];
    if (e < 0) continue;
    const Column col = relations_.column(j);
    for (const auto& mu : ring_.piece(e).basis_monomials) {
      std::vector<Scalar> v(off, 0);
      for (std::size_t i = 0; i < degrees_.size(); ++i) {
        const std::size_t len = (i + 1 < p->offsets.size() ? p->offsets[i + 1] : off) - p->offsets[i];
        ring_.accumulate(col[i], mu, d - degrees_[i], std::span<Scalar>(v).subspan(p->offsets[i], len));
      }
      p->relations.add(std::move(v));
    }
  }
  auto [pos, ins] = cache_->pieces.emplace(d, std::move(p));
  return *pos->second;
}

std::vector<Scalar> GradedModule::realize(const Column& col, const Monomial& mu, int d) const {
  const ModulePiece& p = piece(d);
  std::vector<Scalar> v(p.free_dim, 0);
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    if (col[i].is_zero()) continue;
    const std::size_t end = i + 1 < p.offsets.size() ? p.offsets[i + 1] : p.free_dim;
    ring_.accumulate(col[i], mu, d - degrees_[i], std::span<Scalar>(v).subspan(p.offsets[i], end - p.offsets[i]));
  }
  return v;
}

std::vector<Scalar> GradedModule::realize(const Column& col, int d) const {
  return realize(col, one_monomial(ring_), d);
}

std::vector<Scalar> GradedModule::quotient_coordinates(const Column& col, const Monomial& mu, int d) const {
  return piece(d).relations.quotient_coordinates(realize(col, mu, d));
}

Column GradedModule::to_column(std::span<const Scalar> coords, int d) const {
  const ModulePiece& p = piece(d);
  Column out;
  out.reserve(degrees_.size());
  for (std::size_t i = 0; i < degrees_.size(); ++i) {
    const std::size_t end = i + 1 < p.offsets.size() ? p.offsets[i + 1] : p.free_dim;
    out.push_back(ring_.from_coordinates(coords.subspan(p.offsets[i], end - p.offsets[i]), d - degrees_[i]));
  }
  return out;
}

Column GradedModule::unit(std::size_t i) const {
  Column c = zero_column();
  c[i] = ring_.one();
  return c;
}

Column GradedModule::zero_column() const { return Column(degrees_.size(), ring_.zero()); }

bool GradedModule::is_zero_element(const Column& col, int d) const {
  auto v = realize(col, d);
  return piece(d).relations.contains(v);
}

Generators make_generators(const GradedModule& ambient, const PolyMatrix& columns) {
  Generators g{normalize(ambient.ring(), columns), {}};
  for (std::size_t j = 0; j < columns.cols(); ++j) {
    auto d = ambient.column_degree(g.columns.column(j));
    if (!d) throw InputError("make_generators: zero column has no degree");
    g.degrees.push_back(*d);
  }
  return g;
}

int kernel_search_bound(const GradedModule& target, const std::vector<int>& source_degrees, const PolyMatrix& map) {
  const GradedRing& R = target.ring();
  const int src_max = source_degrees.empty() ? 0 : *std::max_element(source_degrees.begin(), source_degrees.end());
  int spread = std::max(R.max_relation_degree(), R.max_weight());
  for (std::size_t j = 0; j < map.cols(); ++j)
    for (std::size_t i = 0; i < map.rows(); ++i)
      if (!map(i, j).is_zero()) spread = std::max(spread, source_degrees[j] - target.degrees()[i]);
  if (target.num_generators() > 0) {
    const int tmin = target.min_degree();
    for (int b : target.relation_degrees()) spread = std::max(spread, b - tmin);
  }
  return src_max + spread + R.max_weight();
}

Generators kernel(const GradedModule& target, const std::vector<int>& source_degrees, const PolyMatrix& map, int dmax) {
  const GradedRing& R = target.ring();
  const std::size_t nsrc = source_degrees.size();
  Generators found{PolyMatrix(nsrc, 0, R.nvars(), R.field()), {}};
  if (nsrc == 0) return found;
  if (map.rows() != target.num_generators() || map.cols() != nsrc) throw InputError("kernel: map has the wrong shape");

  GradedModule source = GradedModule::free(R, source_degrees);
  std::vector<Column> cols;
  for (std::size_t j = 0; j < nsrc; ++j) cols.push_back(map.column(j));
  std::vector<Column> found_cols;

  const int bound = kernel_search_bound(target, source_degrees, map);
  const int margin = R.max_weight() + R.max_relation_degree();
  int stop = bound;
  const int start = *std::min_element(source_degrees.begin(), source_degrees.end());
  for (int d = start; d <= stop; ++d) {
    if (d > dmax) {
      throw TruncationError("kernel generators not certified past degree " + std::to_string(dmax) +
                                "; rerun with a larger --dmax (at least " + std::to_string(stop) + ")",
                            d);
    }
    const ModulePiece& sp = source.piece(d);
    if (sp.free_dim == 0) continue;
    const std::size_t qdim = target.dim(d);
    Matrix a(qdim, sp.free_dim, R.field());
    for (std::size_t j = 0; j < nsrc; ++j) {
      const int e = d - source_degrees[j];
      if (e < 0) continue;
      const auto& basis = R.piece(e).basis_monomials;
      for (std::size_t b = 0; b < basis.size(); ++b) {
        if (qdim == 0) break;
        auto q = target.quotient_coordinates(cols[j], basis[b], d);
        for (std::size_t r = 0; r < qdim; ++r) a(r, sp.offsets[j] + b) = q[r];
      }
    }
    Matrix k = kernel_basis(a);
    if (k.cols() == 0) continue;
    Reducer span(sp.free_dim, R.field());
    for (std::size_t l = 0; l < found_cols.size(); ++l) {
      const int e = d - found.degrees[l];
      if (e < 0) continue;
      for (const auto& mu : R.piece(e).basis_monomials) span.add(source.realize(found_cols[l], mu, d));
    }
    for (std::size_t c = 0; c < k.cols(); ++c) {
      auto v = k.column(c);
      if (!span.add(v)) continue;
      Column g = source.to_column(v, d);
      found_cols.push_back(g);
      found.columns.append_column(g);
      found.degrees.push_back(d);
      stop = std::max(stop, d + margin);
    }
  }
  return found;
}

std::vector<std::size_t> minimal_subset(const GradedModule& ambient, const Generators& gens) {
  const GradedRing& R = ambient.ring();
  std::vector<std::size_t> order(gens.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return gens.degrees[a] < gens.degrees[b]; });
  std::vector<std::size_t> kept;
  std::size_t pos = 0;
  while (pos < order.size()) {
    const int d = gens.degrees[order[pos]];
    Reducer span(ambient.dim(d), R.field());
    for (auto l : kept) {
      const int e = d - gens.degrees[l];
      if (e <= 0) continue;
      const Column col = gens.columns.column(l);
      for (const auto& mu : R.piece(e).basis_monomials) span.add(ambient.quotient_coordinates(col, mu, d));
    }
    for (; pos < order.size() && gens.degrees[order[pos]] == d; ++pos) {
      const std::size_t idx = order[pos];
      if (span.add(ambient.quotient_coordinates(gens.columns.column(idx), one_monomial(R), d))) kept.push_back(idx);
    }
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::optional<Column> express(const GradedModule& ambient, const Generators& gens, const Column& element, int degree) {
  const GradedRing& R = ambient.ring();
  const std::size_t qdim = ambient.dim(degree);
  struct Slot {
    std::size_t gen;
    const Monomial* mu;
  };
  std::vector<Slot> slots;
  for (std::size_t l = 0; l < gens.size(); ++l) {
    const int e = degree - gens.degrees[l];
    if (e < 0) continue;
    for (const auto& mu : R.piece(e).basis_monomials) slots.push_back({l, &mu});
  }
  Matrix a(qdim, slots.size(), R.field());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    auto q = ambient.quotient_coordinates(gens.columns.column(slots[s].gen), *slots[s].mu, degree);
    for (std::size_t r = 0; r < qdim; ++r) a(r, s) = q[r];
  }
  auto rhs = ambient.quotient_coordinates(element, one_monomial(R), degree);
  auto x = solve(a, rhs);
  if (!x) return std::nullopt;
  Column out(gens.size(), R.zero());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if ((*x)[s] != 0) out[slots[s].gen].add_term(*slots[s].mu, (*x)[s]);
  }
  return out;
}

bool in_submodule(const GradedModule& ambient, const Generators& gens, const Column& element, int degree) {
  return express(ambient, gens, element, degree).has_value();
}

Pruned prune(const GradedModule& m) {
  const GradedRing& R = m.ring();
  const std::size_t n = m.num_generators();
  Generators units{PolyMatrix::identity(n, R.nvars(), R.field()), m.degrees()};
  auto kept = minimal_subset(m, units);
  Generators kept_units{units.columns.select_columns(kept), {}};
  for (auto k : kept) kept_units.degrees.push_back(m.degrees()[k]);

  PolyMatrix tau(kept.size(), n, R.nvars(), R.field());
  std::vector<long> position(n, -1);
  for (std::size_t p = 0; p < kept.size(); ++p) position[kept[p]] = static_cast<long>(p);
  for (std::size_t i = 0; i < n; ++i) {
    if (position[i] >= 0) {
      tau(static_cast<std::size_t>(position[i]), i) = R.one();
      continue;
    }
    auto c = express(m, kept_units, m.unit(i), m.degrees()[i]);
    if (!c) throw ConsistencyError("prune: generator not expressible by the kept generators");
    for (std::size_t p = 0; p < kept.size(); ++p) tau(p, i) = (*c)[p];
  }

  GradedModule free_kept = GradedModule::free(R, kept_units.degrees);
  PolyMatrix rel = normalize(R, tau * m.relations());
  Generators relgens{PolyMatrix(kept.size(), 0, R.nvars(), R.field()), {}};
  for (std::size_t j = 0; j < rel.cols(); ++j) {
    Column col = rel.column(j);
    auto d = free_kept.column_degree(col);
    if (!d) continue;
    relgens.columns.append_column(col);
    relgens.degrees.push_back(*d);
  }
  auto rel_kept = minimal_subset(free_kept, relgens);
  GradedModule out(R, kept_units.degrees, relgens.columns.select_columns(rel_kept), m.label());
  return {std::move(out), std::move(kept), std::move(tau)};
}

GradedModule minimal_presentation(const GradedModule& m) { return prune(m).module; }

std::size_t beta0(const GradedModule& m) {
  Generators units{PolyMatrix::identity(m.num_generators(), m.ring().nvars(), m.ring().field()), m.degrees()};
  return minimal_subset(m, units).size();
}

GradedModule submodule(const GradedModule& ambient, const Generators& gens, int dmax) {
  Generators k = kernel(ambient, gens.degrees, gens.columns, dmax);
  return GradedModule(ambient.ring(), gens.degrees, k.columns);
}

GradedModule quotient(const GradedModule& ambient, const Generators& gens) {
  return GradedModule(ambient.ring(), ambient.degrees(), PolyMatrix::hstack(ambient.relations(), gens.columns),
                      ambient.label());
}

GradedModule direct_sum(const GradedModule& a, const GradedModule& b) {
  if (!a.ring().same_as(b.ring())) throw InputError("direct sum over different rings");
  std::vector<int> degs = a.degrees();
  degs.insert(degs.end(), b.degrees().begin(), b.degrees().end());
  std::string label = a.label().empty() || b.label().empty() ? std::string{} : a.label() + "+" + b.label();
  return GradedModule(a.ring(), std::move(degs), PolyMatrix::block_diagonal(a.relations(), b.relations()), label);
}

GradedModule direct_sum(const std::vector<GradedModule>& parts, const GradedRing& ring) {
  GradedModule out = GradedModule::zero(ring);
  bool first = true;
  for (const auto& p : parts) {
    out = first ? p : direct_sum(out, p);
    first = false;
  }
  return out;
}

GradedModule twist(const GradedModule& m, int s) {
  std::vector<int> degs = m.degrees();
  for (auto& d : degs) d -= s;
  return GradedModule(m.ring(), std::move(degs), m.relations(), m.label());
}

GradedModule tensor(const GradedModule& a, const GradedModule& b) {
  const GradedRing& R = a.ring();
  std::vector<int> degs;
  for (int x : a.degrees())
    for (int y : b.degrees()) degs.push_back(x + y);
  PolyMatrix rel = PolyMatrix::hstack(
      PolyMatrix::kronecker(a.relations(), PolyMatrix::identity(b.num_generators(), R.nvars(), R.field())),
      PolyMatrix::kronecker(PolyMatrix::identity(a.num_generators(), R.nvars(), R.field()), b.relations()));
  return GradedModule(R, std::move(degs), rel);
}

GradedModule residue_field(const GradedRing& ring) {
  PolyMatrix rel(1, ring.nvars(), ring.nvars(), ring.field());
  for (std::size_t i = 0; i < ring.nvars(); ++i) rel(0, i) = ring.var(i);
  return GradedModule(ring, {0}, rel, "k");
}

GradedModule ring_module(const GradedRing& ring) { return GradedModule::free(ring, {0}, "R"); }

GradedModule cyclic_quotient(const GradedRing& ring, const std::vector<Polynomial>& ideal) {
  PolyMatrix rel(1, ideal.size(), ring.nvars(), ring.field());
  for (std::size_t i = 0; i < ideal.size(); ++i) rel(0, i) = ideal[i];
  return GradedModule(ring, {0}, rel);
}

GradedModule ideal_module(const GradedRing& ring, const std::vector<Polynomial>& ideal, int dmax) {
  GradedModule r = ring_module(ring);
  PolyMatrix cols(1, 0, ring.nvars(), ring.field());
  for (const auto& f : ideal) {
    Polynomial g = ring.normal_form(f);
    if (!g.is_zero()) cols.append_column({g});
  }
  Generators gens = make_generators(r, cols);
  auto kept = minimal_subset(r, gens);
  Generators mins{gens.columns.select_columns(kept), {}};
  for (auto k : kept) mins.degrees.push_back(gens.degrees[k]);
  return submodule(r, mins, dmax);
}

GradedModule maximal_ideal(const GradedRing& ring) {
  std::vector<Polynomial> vars;
  for (std::size_t i = 0; i < ring.nvars(); ++i) vars.push_back(ring.var(i));
  return ideal_module(ring, vars).relabeled("m");
}

std::vector<Polynomial> power_of_maximal_ideal(const GradedRing& ring, int t) {
  std::vector<Polynomial> out;
  std::vector<int> unit(ring.nvars(), 1);
  for (const auto& m : monomials_of_degree(unit, t)) {
    Polynomial p = ring.normal_form(Polynomial::monomial(ring.field(), m));
    if (!p.is_zero()) out.push_back(p);
  }
  return out;
}

bool is_zero(const GradedModule& m) {
  for (std::size_t i = 0; i < m.num_generators(); ++i) {
    if (!m.is_zero_element(m.unit(i), m.degrees()[i])) return false;
  }
  return true;
}

HomResult hom(const GradedModule& source, const GradedModule& target, int dmax) {
  const GradedRing& R = source.ring();
  if (!R.same_as(target.ring())) throw InputError("Hom over different rings");
  const std::size_t m = source.num_generators();
  const std::size_t n = target.num_generators();
  std::vector<int> free_degs;
  std::vector<GradedModule> ambient_parts;
  for (std::size_t i = 0; i < m; ++i) {
    ambient_parts.push_back(twist(target, source.degrees()[i]));
    for (std::size_t k = 0; k < n; ++k) free_degs.push_back(target.degrees()[k] - source.degrees()[i]);
  }
  GradedModule ambient = direct_sum(ambient_parts, R);
  Generators z;
  if (source.relations().cols() == 0 || n == 0) {
    z = Generators{PolyMatrix::identity(m * n, R.nvars(), R.field()), free_degs};
  } else {
    std::vector<GradedModule> parts;
    for (int b : source.relation_degrees()) parts.push_back(twist(target, b));
    GradedModule image_side = direct_sum(parts, R);
    PolyMatrix a = PolyMatrix::kronecker(source.relations().transpose(),
                                         PolyMatrix::identity(n, R.nvars(), R.field()));
    z = kernel(image_side, free_degs, a, dmax);
  }
  // Drop generators that vanish in the ambient module and keep a minimal set.
  auto kept = minimal_subset(ambient, z);
  Generators mins{z.columns.select_columns(kept), {}};
  for (auto k : kept) mins.degrees.push_back(z.degrees[k]);
  return {submodule(ambient, mins, dmax), mins, m, n};
}

HomResult dual(const GradedModule& m, int dmax) { return hom(m, ring_module(m.ring()), dmax); }

bool is_well_defined(const ModuleMap& f) {
  const GradedRing& R = f.source.ring();
  PolyMatrix img = normalize(R, f.matrix * f.source.relations());
  for (std::size_t j = 0; j < img.cols(); ++j) {
    if (!f.target.is_zero_element(img.column(j), f.source.relation_degrees()[j])) return false;
  }
  return true;
}

bool is_zero_map(const ModuleMap& f) {
  for (std::size_t j = 0; j < f.matrix.cols(); ++j) {
    if (!f.target.is_zero_element(f.matrix.column(j), f.source.degrees()[j])) return false;
  }
  return true;
}

Generators kernel_of(const ModuleMap& f, int dmax) {
  return kernel(f.target, f.source.degrees(), f.matrix, dmax);
}

bool is_injective(const ModuleMap& f, int dmax) {
  Generators k = kernel_of(f, dmax);
  for (std::size_t j = 0; j < k.size(); ++j) {
    if (!f.source.is_zero_element(k.columns.column(j), k.degrees[j])) return false;
  }
  return true;
}

bool is_surjective(const ModuleMap& f) {
  Generators img{f.matrix, f.source.degrees()};
  for (std::size_t i = 0; i < f.target.num_generators(); ++i) {
    if (!in_submodule(f.target, img, f.target.unit(i), f.target.degrees()[i])) return false;
  }
  return true;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  return {f.source, g.target, normalize(f.source.ring(), g.matrix * f.matrix)};
}

GradedModule image_module(const ModuleMap& f, int dmax) {
  return submodule(f.target, Generators{f.matrix, f.source.degrees()}, dmax);
}

GradedModule cokernel_module(const ModuleMap& f) { return quotient(f.target, Generators{f.matrix, f.source.degrees()}); }

LengthResult length(const GradedModule& m, int dmax) {
  LengthResult out;
  if (m.num_generators() == 0) {
    out.finite = true;
    return out;
  }
  const int top = m.max_degree();
  const int w = m.ring().max_weight();
  int zero_run = 0;
  for (int d = m.min_degree(); d <= dmax; ++d) {
    const auto dd = static_cast<long long>(m.dim(d));
    out.length += dd;
    zero_run = dd == 0 ? zero_run + 1 : 0;
    if (d > top && zero_run >= w) {
      out.finite = true;
      out.certified_through = d;
      return out;
    }
  }
  out.finite = false;
  out.length = 0;
  out.certified_through = dmax;
  return out;
}

Matrix evaluation_pairing(const HomResult& dual_of_g, const Generators& elements) {
  const auto& emb = dual_of_g.embedding;
  Matrix out(emb.size(), elements.size(), emb.columns.field());
  const PrimeField& k = emb.columns.field();
  for (std::size_t l = 0; l < emb.size(); ++l) {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (emb.degrees[l] + elements.degrees[i] != 0) continue;
      Scalar acc = 0;
      for (std::size_t r = 0; r < emb.columns.rows(); ++r) {
        acc = k.add(acc, k.mul(constant_coefficient(emb.columns(r, l)), constant_coefficient(elements.columns(r, i))));
      }
      out(l, i) = acc;
    }
  }
  return out;
}

}  // namespace gchar
