#include "gchar/complexes.hpp"

#include <algorithm>
#include <bit>

#include "gchar/error.hpp"

namespace gchar {

void ChainComplex::set_slot(int n, GradedModule m) {
  if (!m.ring().same_as(ring_)) throw InputError("complex slot over a different ring");
  slots_.insert_or_assign(n, std::move(m));
}

void ChainComplex::set_differential(int n, PolyMatrix d) {
  const auto& src = slot(n);
  const auto& tgt = slot(n - 1);
  if (d.rows() != tgt.num_generators() || d.cols() != src.num_generators()) {
    throw InputError("differential " + std::to_string(n) + " has shape " + std::to_string(d.rows()) + "x" +
                     std::to_string(d.cols()) + ", expected " + std::to_string(tgt.num_generators()) + "x" +
                     std::to_string(src.num_generators()));
  }
  diffs_.insert_or_assign(n, normalize(ring_, d));
}

const GradedModule& ChainComplex::slot(int n) const {
  auto it = slots_.find(n);
  return it == slots_.end() ? zero_ : it->second;
}

PolyMatrix ChainComplex::differential(int n) const {
  auto it = diffs_.find(n);
  if (it != diffs_.end()) return it->second;
  return PolyMatrix(slot(n - 1).num_generators(), slot(n).num_generators(), ring_.nvars(), ring_.field());
}

ModuleMap ChainComplex::differential_map(int n) const { return {slot(n), slot(n - 1), differential(n)}; }

int ChainComplex::min_index() const { return slots_.empty() ? 0 : slots_.begin()->first; }
int ChainComplex::max_index() const { return slots_.empty() ? 0 : slots_.rbegin()->first; }

std::vector<int> ChainComplex::indices() const {
  std::vector<int> out;
  for (const auto& [n, m] : slots_) out.push_back(n);
  return out;
}

bool ChainComplex::is_valid(std::string* reason) const {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  for (const auto& [n, d] : diffs_) {
    const auto& src = slot(n);
    const auto& tgt = slot(n - 1);
    for (std::size_t j = 0; j < d.cols(); ++j) {
      for (std::size_t i = 0; i < d.rows(); ++i) {
        const auto& e = d(i, j);
        if (e.is_zero()) continue;
        if (!e.is_homogeneous(ring_.weights()) || e.degree(ring_.weights()) != src.degrees()[j] - tgt.degrees()[i])
          return fail("differential " + std::to_string(n) + " is not homogeneous of degree 0");
      }
    }
    if (!is_well_defined(differential_map(n))) return fail("differential " + std::to_string(n) + " is not well defined");
    if (diffs_.count(n - 1)) {
      ModuleMap sq = compose(differential_map(n - 1), differential_map(n));
      if (!is_zero_map(sq)) return fail("d^2 != 0 at slot " + std::to_string(n));
    }
  }
  return true;
}

void ChainComplex::validate() const {
  std::string why;
  if (!is_valid(&why)) throw ConsistencyError("invalid complex: " + why);
}

PolyMatrix ChainMap::component(int n) const {
  auto it = components.find(n);
  if (it != components.end()) return it->second;
  const auto& r = source.ring();
  return PolyMatrix(target.slot(n).num_generators(), source.slot(n).num_generators(), r.nvars(), r.field());
}

bool is_chain_map(const ChainMap& f) {
  std::vector<int> idx = f.source.indices();
  for (int n : f.target.indices()) idx.push_back(n);
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  const auto& R = f.source.ring();
  for (int n : idx) {
    ModuleMap fn{f.source.slot(n), f.target.slot(n), f.component(n)};
    if (!is_well_defined(fn)) return false;
    // d^T f_n == f_{n-1} d^S as maps slot n -> target slot n-1
    PolyMatrix lhs = normalize(R, f.target.differential(n) * f.component(n));
    PolyMatrix rhs = normalize(R, f.component(n - 1) * f.source.differential(n));
    PolyMatrix sum(lhs.rows(), lhs.cols(), R.nvars(), R.field());
    for (std::size_t i = 0; i < lhs.rows(); ++i)
      for (std::size_t j = 0; j < lhs.cols(); ++j) sum(i, j) = lhs(i, j) - rhs(i, j);
    if (!is_zero_map({f.source.slot(n), f.target.slot(n - 1), sum})) return false;
  }
  return true;
}

ChainComplex shift(const ChainComplex& c) {
  ChainComplex out(c.ring());
  for (int n : c.indices()) out.set_slot(n + 1, c.slot(n));
  for (int n : c.indices()) {
    if (c.has_slot(n - 1)) out.set_differential(n + 1, c.differential(n).negated());
  }
  return out;
}

ChainComplex single(const GradedModule& m, int n) {
  ChainComplex out(m.ring());
  out.set_slot(n, m);
  return out;
}

GradedModule homology(const ChainComplex& c, int n, int dmax) {
  const GradedModule& cn = c.slot(n);
  if (cn.num_generators() == 0) return GradedModule::zero(c.ring());
  Generators z = kernel_of(c.differential_map(n), dmax);
  Generators b{c.differential(n + 1), c.slot(n + 1).degrees()};
  GradedModule ambient = quotient(cn, b);
  return submodule(ambient, z, dmax);
}

bool is_exact(const ChainComplex& c, int dmax) {
  for (int n : c.indices()) {
    if (!is_zero(homology(c, n, dmax))) return false;
  }
  return true;
}

ChainComplex cone(const ChainMap& f) {
  if (!is_chain_map(f)) throw InputError("cone: input is not a chain map");
  const auto& R = f.source.ring();
  ChainComplex out(R);
  std::vector<int> idx;
  for (int n : f.source.indices()) idx.push_back(n + 1);
  for (int n : f.target.indices()) idx.push_back(n);
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  for (int n : idx) out.set_slot(n, direct_sum(f.source.slot(n - 1), f.target.slot(n)));
  for (int n : idx) {
    if (!out.has_slot(n - 1)) continue;
    PolyMatrix top = PolyMatrix::hstack(f.source.differential(n - 1).negated(),
                                        PolyMatrix(f.source.slot(n - 2).num_generators(),
                                                   f.target.slot(n).num_generators(), R.nvars(), R.field()));
    PolyMatrix bottom = PolyMatrix::hstack(f.component(n - 1), f.target.differential(n));
    out.set_differential(n, PolyMatrix::vstack(top, bottom));
  }
  out.validate();
  return out;
}

namespace {

struct Summand {
  int i;
  int j;
  std::size_t offset;
};

std::vector<Summand> tensor_layout(const ChainComplex& a, const ChainComplex& b, int n, std::size_t* total) {
  std::vector<Summand> out;
  std::size_t off = 0;
  for (int i : a.indices()) {
    const int j = n - i;
    if (!b.has_slot(j)) continue;
    out.push_back({i, j, off});
    off += a.slot(i).num_generators() * b.slot(j).num_generators();
  }
  if (total) *total = off;
  return out;
}

}  // namespace

ChainComplex tensor(const ChainComplex& a, const ChainComplex& b) {
  const auto& R = a.ring();
  ChainComplex out(R);
  std::vector<int> idx;
  for (int i : a.indices())
    for (int j : b.indices()) idx.push_back(i + j);
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  for (int n : idx) {
    std::vector<GradedModule> parts;
    for (const auto& s : tensor_layout(a, b, n, nullptr)) parts.push_back(tensor(a.slot(s.i), b.slot(s.j)));
    out.set_slot(n, direct_sum(parts, R));
  }
  for (int n : idx) {
    if (!out.has_slot(n - 1)) continue;
    std::size_t rows = 0, cols = 0;
    auto src = tensor_layout(a, b, n, &cols);
    auto tgt = tensor_layout(a, b, n - 1, &rows);
    PolyMatrix d(rows, cols, R.nvars(), R.field());
    auto place = [&](int ti, int tj, const PolyMatrix& block, std::size_t col_off) {
      for (const auto& t : tgt) {
        if (t.i != ti || t.j != tj) continue;
        for (std::size_t r = 0; r < block.rows(); ++r)
          for (std::size_t c = 0; c < block.cols(); ++c) d(t.offset + r, col_off + c) += block(r, c);
      }
    };
    for (const auto& s : src) {
      const std::size_t nb = b.slot(s.j).num_generators();
      const std::size_t na = a.slot(s.i).num_generators();
      if (a.has_slot(s.i - 1)) {
        PolyMatrix blk = PolyMatrix::kronecker(a.differential(s.i), PolyMatrix::identity(nb, R.nvars(), R.field()));
        place(s.i - 1, s.j, blk, s.offset);
      }
      if (b.has_slot(s.j - 1)) {
        PolyMatrix blk = PolyMatrix::kronecker(PolyMatrix::identity(na, R.nvars(), R.field()), b.differential(s.j));
        if (s.i % 2 != 0) blk = blk.negated();
        place(s.i, s.j - 1, blk, s.offset);
      }
    }
    out.set_differential(n, d);
  }
  out.validate();
  return out;
}

ChainComplex tensor(const ChainComplex& c, const GradedModule& n) { return tensor(c, single(n, 0)); }

ChainComplex koszul(const GradedRing& ring, const std::vector<Polynomial>& elems) {
  const std::size_t c = elems.size();
  if (c > 20) throw InputError("koszul: too many elements");
  std::vector<int> degs;
  for (const auto& f : elems) {
    if (!f.is_homogeneous(ring.weights()) || f.is_zero()) throw InputError("koszul: elements must be homogeneous and nonzero");
    degs.push_back(f.degree(ring.weights()));
  }
  std::vector<std::vector<unsigned>> subsets(c + 1);
  for (unsigned mask = 0; mask < (1u << c); ++mask) subsets[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
  ChainComplex out(ring);
  for (std::size_t j = 0; j <= c; ++j) {
    std::vector<int> slot_degs;
    for (unsigned mask : subsets[j]) {
      int d = 0;
      for (std::size_t i = 0; i < c; ++i)
        if (mask & (1u << i)) d += degs[i];
      slot_degs.push_back(d);
    }
    out.set_slot(static_cast<int>(j), GradedModule::free(ring, slot_degs));
  }
  for (std::size_t j = 1; j <= c; ++j) {
    PolyMatrix d(subsets[j - 1].size(), subsets[j].size(), ring.nvars(), ring.field());
    for (std::size_t col = 0; col < subsets[j].size(); ++col) {
      const unsigned mask = subsets[j][col];
      int pos = 0;
      for (std::size_t i = 0; i < c; ++i) {
        if (!(mask & (1u << i))) continue;
        const unsigned smaller = mask & ~(1u << i);
        const auto row = static_cast<std::size_t>(
            std::find(subsets[j - 1].begin(), subsets[j - 1].end(), smaller) - subsets[j - 1].begin());
        d(row, col) = pos % 2 == 0 ? elems[i] : -elems[i];
        ++pos;
      }
    }
    out.set_differential(static_cast<int>(j), d);
  }
  out.validate();
  return out;
}

ChainComplex dualize(const ChainComplex& c, int dmax) {
  const auto& R = c.ring();
  ChainComplex out(R);
  if (c.empty()) return out;
  const int top = c.max_index();
  std::map<int, HomResult> duals;
  for (int n : c.indices()) {
    const auto& m = c.slot(n);
    if (m.has_free_presentation()) {
      std::vector<int> degs;
      for (int a : m.degrees()) degs.push_back(-a);
      HomResult h{GradedModule::free(R, degs),
                  Generators{PolyMatrix::identity(m.num_generators(), R.nvars(), R.field()), degs},
                  m.num_generators(), 1};
      duals.emplace(n, std::move(h));
    } else {
      duals.emplace(n, dual(m, dmax));
    }
    out.set_slot(top - n, duals.at(n).module);
  }
  for (int n : c.indices()) {
    if (!c.has_slot(n + 1)) continue;
    // slot (top - n) = Hom(C_n) -> slot (top - n - 1) = Hom(C_{n+1}); phi -> phi . d_{n+1}
    const HomResult& from = duals.at(n);
    const HomResult& to = duals.at(n + 1);
    GradedModule ambient = GradedModule::free(R, [&] {
      std::vector<int> degs;
      for (int a : c.slot(n + 1).degrees()) degs.push_back(-a);
      return degs;
    }());
    PolyMatrix dt = c.differential(n + 1).transpose();
    PolyMatrix d(to.module.num_generators(), from.module.num_generators(), R.nvars(), R.field());
    for (std::size_t g = 0; g < from.embedding.size(); ++g) {
      PolyMatrix img = normalize(R, dt * from.embedding.columns.select_columns({g}));
      auto coeffs = express(ambient, to.embedding, img.column(0), from.embedding.degrees[g]);
      if (!coeffs) throw ConsistencyError("dualize: induced map does not land in the dual");
      for (std::size_t r = 0; r < coeffs->size(); ++r) d(r, g) = (*coeffs)[r];
    }
    out.set_differential(top - n, d);
  }
  out.validate();
  return out;
}

ChainComplex hard_truncation(const ChainComplex& c, int n) {
  ChainComplex out(c.ring());
  for (int i : c.indices())
    if (i >= n) out.set_slot(i, c.slot(i));
  for (int i : c.indices())
    if (i > n && c.has_slot(i - 1)) out.set_differential(i, c.differential(i));
  return out;
}

ChainComplex soft_truncation(const ChainComplex& c, int d, int dmax) {
  ChainComplex out(c.ring());
  for (int i : c.indices())
    if (i < d) out.set_slot(i, c.slot(i));
  for (int i : c.indices())
    if (i < d && c.has_slot(i - 1)) out.set_differential(i, c.differential(i));
  if (c.has_slot(d) && c.has_slot(d - 1)) {
    const PolyMatrix dd = c.differential(d);
    GradedModule im = image_module(c.differential_map(d), dmax);
    Pruned p = prune(im);
    out.set_slot(d, p.module);
    out.set_differential(d, dd.select_columns(p.kept));
  }
  return out;
}

ChainComplex augment(const ChainComplex& c, const GradedModule& target, const PolyMatrix& augmentation) {
  ChainComplex out(c.ring());
  for (int i : c.indices()) out.set_slot(i, c.slot(i));
  out.set_slot(-1, target);
  for (int i : c.indices())
    if (c.has_slot(i - 1)) out.set_differential(i, c.differential(i));
  out.set_differential(0, augmentation);
  return out;
}

AlternatingSums alternating_sum(const ChainComplex& c, int dmax) {
  AlternatingSums out;
  for (int n : c.indices()) {
    auto ls = length(c.slot(n), dmax);
    if (!ls.finite) throw PreconditionError("slot " + std::to_string(n) + " has no finite-length certificate");
    auto lh = length(homology(c, n, dmax), dmax);
    if (!lh.finite) throw ConsistencyError("homology of a finite-length slot is not of finite length");
    const long long sign = n % 2 == 0 ? 1 : -1;
    out.slots += sign * ls.length;
    out.homology += sign * lh.length;
  }
  if (out.slots != out.homology) throw ConsistencyError("alternating sums of slots and homology differ");
  return out;
}

}  // namespace gchar
