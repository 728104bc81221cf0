#include "gchar/polynomial.hpp"

#include <sstream>

#include "gchar/error.hpp"

namespace gchar {

int weighted_degree(const Monomial& m, const std::vector<int>& weights) {
  int d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * weights[i];
  return d;
}

Monomial monomial_product(const Monomial& a, const Monomial& b) {
  Monomial out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

namespace {

void enumerate(const std::vector<int>& w, std::size_t i, int remaining, Monomial& cur,
               std::vector<Monomial>& out) {
  if (i + 1 == w.size()) {
    if (remaining % w[i] == 0) {
      cur[i] = remaining / w[i];
      out.push_back(cur);
    }
    return;
  }
  for (int e = remaining / w[i]; e >= 0; --e) {
    cur[i] = e;
    enumerate(w, i + 1, remaining - e * w[i], cur, out);
  }
  cur[i] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const std::vector<int>& weights, int d) {
  std::vector<Monomial> out;
  if (d < 0 || weights.empty()) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial cur(weights.size(), 0);
  enumerate(weights, 0, d, cur, out);
  return out;
}

Polynomial Polynomial::constant(std::size_t nvars, PrimeField field, long long c) {
  Polynomial p(nvars, field);
  p.add_term(Monomial(nvars, 0), field.from_int(c));
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, PrimeField field, std::size_t i) {
  Monomial m(nvars, 0);
  m[i] = 1;
  return monomial(field, m);
}

Polynomial Polynomial::monomial(PrimeField field, const Monomial& m, Scalar c) {
  Polynomial p(m.size(), field);
  p.add_term(m, c);
  return p;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

void Polynomial::add_term(const Monomial& m, Scalar c) {
  c %= field_.prime();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::degree(const std::vector<int>& weights) const {
  if (terms_.empty()) return 0;
  const int d = weighted_degree(terms_.begin()->first, weights);
  for (const auto& [m, c] : terms_) {
    if (weighted_degree(m, weights) != d) throw InputError("polynomial is not homogeneous");
  }
  return d;
}

bool Polynomial::is_homogeneous(const std::vector<int>& weights) const {
  if (terms_.empty()) return true;
  const int d = weighted_degree(terms_.begin()->first, weights);
  for (const auto& [m, c] : terms_) {
    if (weighted_degree(m, weights) != d) return false;
  }
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(nvars_, field_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, field_.neg(c));
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (nvars_ == 0 && terms_.empty()) {
    nvars_ = o.nvars_;
    field_ = o.field_;
  }
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (nvars_ == 0 && terms_.empty()) {
    nvars_ = o.nvars_;
    field_ = o.field_;
  }
  for (const auto& [m, c] : o.terms_) add_term(m, field_.neg(c));
  return *this;
}

Polynomial Polynomial::scaled(Scalar c) const {
  Polynomial out(nvars_, field_);
  if (c % field_.prime() == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, field_.mul(v, c));
  return out;
}

Polynomial Polynomial::times_monomial(const Monomial& mono, Scalar c) const {
  Polynomial out(nvars_, field_);
  if (c % field_.prime() == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(monomial_product(m, mono), field_.mul(v, c));
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(a.nvars_ ? a.nvars_ : b.nvars_, a.nvars_ ? a.field_ : b.field_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(monomial_product(ma, mb), out.field_.mul(ca, cb));
  return out;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(nvars_, field_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& polys) const {
  if (polys.size() != nvars_) throw InputError("substitute: wrong number of polynomials");
  if (polys.empty()) return *this;
  Polynomial out(polys.front().nvars(), field_);
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(out.nvars(), field_, 1).scaled(c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] > 0) term = term * polys[i].pow(static_cast<unsigned>(m[i]));
    }
    out += term;
  }
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    long long sc = field_.to_signed(c);
    if (first) {
      if (sc < 0) os << "-";
    } else {
      os << (sc < 0 ? "-" : "+");
    }
    first = false;
    const long long mag = sc < 0 ? -sc : sc;
    bool any_var = false;
    for (int e : m) any_var = any_var || e > 0;
    bool need_star = false;
    if (mag != 1 || !any_var) {
      os << mag;
      need_star = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) os << "*";
      os << (i < names.size() ? names[i] : "x" + std::to_string(i));
      if (m[i] > 1) os << "^" << m[i];
      need_star = true;
    }
  }
  return os.str();
}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars, PrimeField field)
    : rows_(rows), cols_(cols), nvars_(nvars), field_(field), entries_(rows * cols, Polynomial(nvars, field)) {}

std::vector<Polynomial> PolyMatrix::column(std::size_t c) const {
  std::vector<Polynomial> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
  return out;
}

void PolyMatrix::append_column(const std::vector<Polynomial>& col) {
  if (col.size() != rows_) throw InputError("append_column: length mismatch");
  std::vector<Polynomial> next;
  next.reserve(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) next.push_back(std::move(entries_[r * cols_ + c]));
    next.push_back(col[r]);
  }
  entries_ = std::move(next);
  ++cols_;
}

PolyMatrix PolyMatrix::transpose() const {
  PolyMatrix t(cols_, rows_, nvars_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

PolyMatrix PolyMatrix::select_columns(const std::vector<std::size_t>& idx) const {
  PolyMatrix out(rows_, idx.size(), nvars_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < idx.size(); ++k) out(r, k) = (*this)(r, idx[k]);
  return out;
}

PolyMatrix PolyMatrix::select_rows(const std::vector<std::size_t>& idx) const {
  PolyMatrix out(idx.size(), cols_, nvars_, field_);
  for (std::size_t k = 0; k < idx.size(); ++k)
    for (std::size_t c = 0; c < cols_; ++c) out(k, c) = (*this)(idx[k], c);
  return out;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::identity(std::size_t n, std::size_t nvars, PrimeField field) {
  PolyMatrix m(n, n, nvars, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Polynomial::constant(nvars, field, 1);
  return m;
}

PolyMatrix PolyMatrix::hstack(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_) throw InputError("hstack: row mismatch");
  PolyMatrix out(a.rows_, a.cols_ + b.cols_, a.nvars_, a.field_);
  for (std::size_t r = 0; r < a.rows_; ++r) {
    for (std::size_t c = 0; c < a.cols_; ++c) out(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols_; ++c) out(r, a.cols_ + c) = b(r, c);
  }
  return out;
}

PolyMatrix PolyMatrix::vstack(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.cols_) throw InputError("vstack: column mismatch");
  PolyMatrix out(a.rows_ + b.rows_, a.cols_, a.nvars_, a.field_);
  for (std::size_t c = 0; c < a.cols_; ++c) {
    for (std::size_t r = 0; r < a.rows_; ++r) out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows_; ++r) out(a.rows_ + r, c) = b(r, c);
  }
  return out;
}

PolyMatrix PolyMatrix::block_diagonal(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(a.rows_ + b.rows_, a.cols_ + b.cols_, a.nvars_ ? a.nvars_ : b.nvars_, a.field_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) out(a.rows_ + r, a.cols_ + c) = b(r, c);
  return out;
}

PolyMatrix PolyMatrix::kronecker(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix out(a.rows_ * b.rows_, a.cols_ * b.cols_, a.nvars_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows_; ++k)
        for (std::size_t l = 0; l < b.cols_; ++l) {
          if (b(k, l).is_zero()) continue;
          out(i * b.rows_ + k, j * b.cols_ + l) = a(i, j) * b(k, l);
        }
    }
  return out;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product: dimension mismatch");
  PolyMatrix out(a.rows_, b.cols_, a.nvars_ ? a.nvars_ : b.nvars_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const auto& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero()) continue;
        out(i, j) += aik * b(k, j);
      }
    }
  return out;
}

PolyMatrix PolyMatrix::scaled(const Polynomial& s) const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_)
    if (!e.is_zero()) e = e * s;
  return out;
}

PolyMatrix PolyMatrix::negated() const {
  PolyMatrix out = *this;
  for (auto& e : out.entries_) e = -e;
  return out;
}

}  // namespace gchar
