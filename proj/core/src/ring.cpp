#include "gchar/ring.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <sstream>

#include "gchar/error.hpp"

namespace gchar {

namespace {

std::atomic<std::uint64_t> next_ring_id{1};

}  // namespace

std::vector<long long> complete_intersection_hilbert(const std::vector<int>& weights,
                                                     const std::vector<int>& relation_degrees, int order) {
  std::vector<long long> s(static_cast<std::size_t>(order) + 1, 0);
  s[0] = 1;
  for (int e : relation_degrees) {
    for (int k = order; k >= e; --k) s[k] -= s[k - e];
  }
  for (int w : weights) {
    for (int k = w; k <= order; ++k) s[k] += s[k - w];
  }
  return s;
}

GradedRing::GradedRing(PrimeField field, std::vector<std::string> names, std::vector<int> weights,
                       std::vector<Polynomial> relations, std::string label)
    : data_(std::make_shared<Data>()), components_(std::make_shared<std::vector<ComponentData>>()) {
  if (weights.empty()) throw InputError("a ring needs at least one variable");
  if (names.size() != weights.size()) throw InputError("variable names and weights differ in length");
  for (int w : weights) {
    if (w <= 0) throw InputError("variable weights must be positive");
  }
  data_->field = field;
  data_->names = std::move(names);
  data_->weights = std::move(weights);
  data_->label = std::move(label);
  data_->id = next_ring_id++;
  for (auto& f : relations) {
    if (f.is_zero()) throw InputError("zero relation");
    if (f.nvars() != data_->weights.size()) throw InputError("relation has the wrong number of variables");
    if (!f.is_homogeneous(data_->weights)) throw InputError("relation is not homogeneous: " + f.to_string(data_->names));
    const int deg = f.degree(data_->weights);
    if (deg <= 0) throw InputError("relation must lie in the maximal ideal");
    data_->relation_degrees.push_back(deg);
    data_->relations.push_back(std::move(f));
  }

  const int n = static_cast<int>(nvars());
  const int c = static_cast<int>(data_->relations.size());
  int window = std::accumulate(data_->relation_degrees.begin(), data_->relation_degrees.end(), 0) +
               std::accumulate(data_->weights.begin(), data_->weights.end(), 0);
  const auto expected = complete_intersection_hilbert(data_->weights, data_->relation_degrees, window);
  for (int d = 0; d <= window; ++d) {
    if (static_cast<long long>(dim(d)) != expected[d]) {
      throw PreconditionError("relations are not a regular sequence (Hilbert function differs in degree " +
                              std::to_string(d) + ")");
    }
  }
  data_->krull_dim = n - c;

  Matrix linear(static_cast<std::size_t>(c), nvars(), field);
  for (std::size_t j = 0; j < data_->relations.size(); ++j) {
    for (std::size_t i = 0; i < nvars(); ++i) {
      Monomial m(nvars(), 0);
      m[i] = 1;
      linear(j, i) = data_->relations[j].coefficient(m);
    }
  }
  data_->embedding_dim = n - static_cast<int>(rank(linear));
}

int GradedRing::max_weight() const noexcept {
  return *std::max_element(data_->weights.begin(), data_->weights.end());
}

int GradedRing::max_relation_degree() const noexcept {
  if (data_->relation_degrees.empty()) return 0;
  return *std::max_element(data_->relation_degrees.begin(), data_->relation_degrees.end());
}

std::unique_ptr<RingPiece> GradedRing::build_piece(int d) const {
  auto piece = std::make_unique<RingPiece>();
  piece->degree = d;
  piece->monomials = monomials_of_degree(data_->weights, d);
  const std::size_t m = piece->monomials.size();
  for (std::size_t i = 0; i < m; ++i) piece->index.emplace(piece->monomials[i], i);

  Matrix ideal(0, m, field());
  for (std::size_t j = 0; j < data_->relations.size(); ++j) {
    const int e = d - data_->relation_degrees[j];
    if (e < 0) continue;
    for (const auto& mu : monomials_of_degree(data_->weights, e)) {
      std::vector<Scalar> row(m, 0);
      for (const auto& [t, c] : data_->relations[j].terms()) row[piece->index.at(monomial_product(t, mu))] = c;
      ideal.append_row(row);
    }
  }
  Echelon ech = rref(std::move(ideal));
  std::vector<char> is_pivot(m, 0);
  for (auto p : ech.pivots) is_pivot[p] = 1;
  std::vector<std::size_t> position(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_pivot[i]) {
      position[i] = piece->basis.size();
      piece->basis.push_back(i);
      piece->basis_monomials.push_back(piece->monomials[i]);
    }
  }
  piece->normal_form = Matrix(m, piece->basis.size(), field());
  for (std::size_t i = 0; i < m; ++i) {
    if (!is_pivot[i]) piece->normal_form(i, position[i]) = 1;
  }
  for (std::size_t r = 0; r < ech.rank(); ++r) {
    const std::size_t p = ech.pivots[r];
    for (std::size_t b = 0; b < piece->basis.size(); ++b) {
      piece->normal_form(p, b) = field().neg(ech.reduced(r, piece->basis[b]));
    }
  }
  return piece;
}

const RingPiece& GradedRing::piece(int d) const {
  std::lock_guard lock(data_->mutex);
  auto it = data_->pieces.find(d);
  if (it != data_->pieces.end()) return *it->second;
  auto [pos, inserted] = data_->pieces.emplace(d, build_piece(d));
  return *pos->second;
}

std::size_t GradedRing::dim(int d) const {
  if (d < 0) return 0;
  return piece(d).dim();
}

void GradedRing::accumulate(const Polynomial& f, const Monomial& mu, int d, std::span<Scalar> out) const {
  if (d < 0 || f.is_zero()) return;
  const RingPiece& p = piece(d);
  const PrimeField& k = field();
  for (const auto& [t, c] : f.terms()) {
    auto it = p.index.find(monomial_product(t, mu));
    if (it == p.index.end()) throw InputError("accumulate: product has the wrong degree");
    const auto row = p.normal_form.row(it->second);
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (row[b] != 0) out[b] = k.add(out[b], k.mul(c, row[b]));
    }
  }
}

std::vector<Scalar> GradedRing::coordinates(const Polynomial& f, int d) const {
  std::vector<Scalar> out(dim(d), 0);
  accumulate(f, Monomial(nvars(), 0), d, out);
  return out;
}

Polynomial GradedRing::from_coordinates(std::span<const Scalar> coords, int d) const {
  Polynomial out = zero();
  if (d < 0) return out;
  const RingPiece& p = piece(d);
  for (std::size_t b = 0; b < coords.size(); ++b) {
    if (coords[b] != 0) out.add_term(p.basis_monomials[b], coords[b]);
  }
  return out;
}

Polynomial GradedRing::normal_form(const Polynomial& f) const {
  std::map<int, Polynomial> by_degree;
  for (const auto& [t, c] : f.terms()) {
    auto [it, ins] = by_degree.try_emplace(weighted_degree(t, weights()), zero());
    it->second.add_term(t, c);
  }
  Polynomial out = zero();
  for (const auto& [d, part] : by_degree) out += from_coordinates(coordinates(part, d), d);
  return out;
}

GradedRing GradedRing::quotient(const Polynomial& s, std::string label) const {
  if (!s.is_homogeneous(weights()) || s.is_zero()) throw PreconditionError("quotient element must be homogeneous and nonzero");
  auto rels = relations();
  rels.push_back(s);
  try {
    return GradedRing(field(), names(), weights(), std::move(rels), std::move(label));
  } catch (const PreconditionError&) {
    throw PreconditionError("element " + s.to_string(names()) + " is not regular on the ring");
  }
}

GradedRing GradedRing::with_components(std::vector<ComponentData> comps) const {
  GradedRing out = *this;
  out.components_ = std::make_shared<const std::vector<ComponentData>>(std::move(comps));
  return out;
}

bool GradedRing::same_as(const GradedRing& o) const {
  if (data_ == o.data_) return true;
  return field() == o.field() && weights() == o.weights() && relations() == o.relations();
}

std::string GradedRing::describe() const {
  std::ostringstream os;
  os << "GF(" << field().prime() << ")[";
  for (std::size_t i = 0; i < nvars(); ++i) {
    if (i) os << ",";
    os << names()[i];
  }
  os << "]";
  if (!relations().empty()) {
    os << "/(";
    for (std::size_t j = 0; j < relations().size(); ++j) {
      if (j) os << ",";
      os << relations()[j].to_string(names());
    }
    os << ")";
  }
  return os.str();
}

}  // namespace gchar
