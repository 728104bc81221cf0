#include "gchar/extension_field.hpp"

#include "gchar/error.hpp"

namespace gchar {

namespace {

using Poly = std::vector<Scalar>;  // low degree first

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, const PrimeField& f) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const Scalar lead_inv = f.inv(m.back());
  while (a.size() > dm) {
    const Scalar c = f.mul(a.back(), lead_inv);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, m[i]));
    trim(a);
  }
  return a;
}

// Enumerates monic polynomials of the given degree; returns false when done.
bool next_monic(Poly& p, const PrimeField& f) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    if (++p[i] < f.prime()) return true;
    p[i] = 0;
  }
  return false;
}

}  // namespace

bool is_irreducible(const std::vector<Scalar>& poly, const PrimeField& field) {
  Poly p = poly;
  trim(p);
  const std::size_t deg = p.size() - 1;
  if (deg <= 1) return deg == 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    Poly q(d + 1, 0);
    q[d] = 1;
    do {
      if (poly_mod(p, q, field).empty()) return false;
    } while (next_monic(q, field));
  }
  return true;
}

ExtensionField::ExtensionField(PrimeField base, unsigned degree) : base_(base), k_(degree) {
  if (degree == 0) throw InputError("extension degree must be positive");
  order_ = 1;
  for (unsigned i = 0; i < degree; ++i) order_ *= base.prime();
  Poly m(degree + 1, 0);
  m[degree] = 1;
  if (degree == 1) {
    modulus_ = m;
    return;
  }
  do {
    if (m[0] != 0 && is_irreducible(m, base_)) {
      modulus_ = m;
      return;
    }
  } while (next_monic(m, base_));
  throw ConsistencyError("no irreducible polynomial found");
}

ExtensionField::Elem ExtensionField::one() const {
  Elem e = zero();
  e[0] = 1;
  return e;
}

ExtensionField::Elem ExtensionField::embed(Scalar a) const {
  Elem e = zero();
  e[0] = a % base_.prime();
  return e;
}

bool ExtensionField::is_zero(const Elem& a) const {
  for (auto c : a)
    if (c) return false;
  return true;
}

ExtensionField::Elem ExtensionField::add(const Elem& a, const Elem& b) const {
  Elem out(k_);
  for (unsigned i = 0; i < k_; ++i) out[i] = base_.add(a[i], b[i]);
  return out;
}

ExtensionField::Elem ExtensionField::sub(const Elem& a, const Elem& b) const {
  Elem out(k_);
  for (unsigned i = 0; i < k_; ++i) out[i] = base_.sub(a[i], b[i]);
  return out;
}

ExtensionField::Elem ExtensionField::mul(const Elem& a, const Elem& b) const {
  Poly prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i) {
    if (!a[i]) continue;
    for (unsigned j = 0; j < k_; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(a[i], b[j]));
  }
  Poly r = poly_mod(prod, modulus_, base_);
  r.resize(k_, 0);
  return r;
}

ExtensionField::Elem ExtensionField::pow(Elem a, std::uint64_t e) const {
  Elem result = one();
  while (e > 0) {
    if (e & 1u) result = mul(result, a);
    a = mul(a, a);
    e >>= 1u;
  }
  return result;
}

ExtensionField::Elem ExtensionField::inv(const Elem& a) const {
  if (is_zero(a)) throw ConsistencyError("division by zero in extension field");
  return pow(a, order_ - 2);
}

ExtensionField::Elem ExtensionField::random(std::mt19937_64& rng) const {
  std::uniform_int_distribution<Scalar> dist(0, base_.prime() - 1);
  Elem e(k_);
  for (auto& c : e) c = dist(rng);
  return e;
}

ExtensionField::Elem ExtensionField::evaluate(const Polynomial& f, const std::vector<Elem>& point) const {
  Elem acc = zero();
  for (const auto& [m, c] : f.terms()) {
    Elem t = embed(c);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] > 0) t = mul(t, pow(point[i], static_cast<std::uint64_t>(m[i])));
    }
    acc = add(acc, t);
  }
  return acc;
}

std::size_t rank(const ExtensionField& f, std::vector<std::vector<ExtensionField::Elem>> rows) {
  if (rows.empty()) return 0;
  const std::size_t ncols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && f.is_zero(rows[sel][c])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[r]);
    const auto inv = f.inv(rows[r][c]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (f.is_zero(rows[i][c])) continue;
      const auto factor = f.mul(rows[i][c], inv);
      for (std::size_t j = c; j < ncols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    ++r;
  }
  return r;
}

}  // namespace gchar
