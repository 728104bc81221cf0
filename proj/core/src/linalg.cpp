#include "gchar/linalg.hpp"

#include <algorithm>
#include <string>

#include "gchar/error.hpp"

namespace gchar {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p >= (1u << 16)) {
    throw InputError("field characteristic must be a prime below 65536, got " + std::to_string(p));
  }
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const noexcept {
  Scalar result = 1 % p_;
  Scalar base = a % p_;
  while (e > 0) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
    e >>= 1u;
  }
  return result;
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw ConsistencyError("division by zero in GF(" + std::to_string(p_) + ")");
  return pow(a, p_ - 2);
}

Scalar PrimeField::from_int(long long v) const noexcept {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<Scalar>(r);
}

long long PrimeField::to_signed(Scalar a) const noexcept {
  return a > p_ / 2 ? static_cast<long long>(a) - static_cast<long long>(p_) : static_cast<long long>(a);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, PrimeField field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

Matrix Matrix::identity(std::size_t n, PrimeField field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<long long>>& rows, PrimeField field) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged matrix literal");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = field.from_int(rows[r][c]);
  }
  return m;
}

std::vector<Scalar> Matrix::column(std::size_t c) const {
  std::vector<Scalar> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(data_.begin(), data_.end(), [](Scalar s) { return s == 0; });
}

void Matrix::append_row(std::span<const Scalar> values) {
  if (values.size() != cols_) throw InputError("append_row: length mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

void Matrix::append_column(std::span<const Scalar> values) {
  if (values.size() != rows_) throw InputError("append_column: length mismatch");
  std::vector<Scalar> next(rows_ * (cols_ + 1));
  for (std::size_t r = 0; r < rows_; ++r) {
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_), cols_,
                next.begin() + static_cast<std::ptrdiff_t>(r * (cols_ + 1)));
    next[r * (cols_ + 1) + cols_] = values[r];
  }
  data_ = std::move(next);
  ++cols_;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product: dimension mismatch");
  const PrimeField& f = a.field_;
  Matrix out(a.rows_, b.cols_, f);
  std::vector<std::uint64_t> acc(b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar aik = a(i, k);
      if (aik == 0) continue;
      const Scalar* brow = b.data_.data() + k * b.cols_;
      for (std::size_t j = 0; j < b.cols_; ++j) acc[j] += static_cast<std::uint64_t>(aik) * brow[j];
      // p < 2^16 keeps 2^32 products from overflowing for a long while; fold periodically.
      if ((k & 0xFFFu) == 0xFFFu)
        for (auto& v : acc) v %= f.prime();
    }
    for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) = static_cast<Scalar>(acc[j] % f.prime());
  }
  return out;
}

std::vector<Scalar> operator*(const Matrix& a, std::span<const Scalar> x) {
  if (a.cols_ != x.size()) throw InputError("matrix-vector product: dimension mismatch");
  std::vector<Scalar> out(a.rows_, 0);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    std::uint64_t acc = 0;
    for (std::size_t k = 0; k < a.cols_; ++k) acc += static_cast<std::uint64_t>(a(i, k)) * x[k];
    out[i] = static_cast<Scalar>(acc % a.field_.prime());
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) noexcept {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

Echelon rref(Matrix m) {
  const PrimeField f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t sel = lead;
    while (sel < m.rows() && m(sel, c) == 0) ++sel;
    if (sel == m.rows()) continue;
    if (sel != lead) {
      auto a = m.row(sel);
      auto b = m.row(lead);
      std::swap_ranges(a.begin(), a.end(), b.begin());
    }
    auto prow = m.row(lead);
    const Scalar scale = f.inv(prow[c]);
    for (std::size_t j = c; j < m.cols(); ++j) prow[j] = f.mul(prow[j], scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead) continue;
      const Scalar factor = m(r, c);
      if (factor == 0) continue;
      auto rr = m.row(r);
      const Scalar nf = f.neg(factor);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (prow[j] != 0) rr[j] = f.add(rr[j], f.mul(nf, prow[j]));
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix kernel_basis(const Matrix& m) {
  const PrimeField f = m.field();
  Echelon e = rref(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto p : e.pivots) is_pivot[p] = 1;
  Matrix k(m.cols(), m.cols() - e.rank(), f);
  std::size_t out = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    k(free, out) = 1;
    for (std::size_t r = 0; r < e.rank(); ++r) k(e.pivots[r], out) = f.neg(e.reduced(r, free));
    ++out;
  }
  return k;
}

std::optional<std::vector<Scalar>> solve(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw InputError("solve: right-hand side has wrong length");
  Matrix aug = m;
  aug.append_column(b);
  Echelon e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  std::vector<Scalar> x(m.cols(), 0);
  for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots[r]] = e.reduced(r, m.cols());
  return x;
}

void Reducer::reduce(std::span<Scalar> v) const {
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const Scalar factor = v[pivots_[k]];
    if (factor == 0) continue;
    const Scalar nf = field_.neg(factor);
    const auto& row = rows_[k];
    for (std::size_t j = 0; j < length_; ++j) {
      if (row[j] != 0) v[j] = field_.add(v[j], field_.mul(nf, row[j]));
    }
  }
}

bool Reducer::add(std::vector<Scalar> v) {
  if (v.size() != length_) throw InputError("Reducer::add: length mismatch");
  reduce(v);
  auto it = std::find_if(v.begin(), v.end(), [](Scalar s) { return s != 0; });
  if (it == v.end()) return false;
  const auto pivot = static_cast<std::size_t>(it - v.begin());
  const Scalar scale = field_.inv(*it);
  for (auto& x : v) x = field_.mul(x, scale);
  rows_.push_back(std::move(v));
  pivots_.push_back(pivot);
  if (is_pivot_.size() != length_) is_pivot_.assign(length_, 0);
  is_pivot_[pivot] = 1;
  return true;
}

bool Reducer::contains(std::span<const Scalar> v) const {
  std::vector<Scalar> w(v.begin(), v.end());
  reduce(w);
  return std::all_of(w.begin(), w.end(), [](Scalar s) { return s == 0; });
}

std::vector<std::size_t> Reducer::free_positions() const {
  std::vector<std::size_t> out;
  out.reserve(length_ - rows_.size());
  for (std::size_t j = 0; j < length_; ++j) {
    if (is_pivot_.empty() || !is_pivot_[j]) out.push_back(j);
  }
  return out;
}

std::vector<Scalar> Reducer::quotient_coordinates(std::span<const Scalar> v) const {
  std::vector<Scalar> w(v.begin(), v.end());
  reduce(w);
  std::vector<Scalar> out;
  out.reserve(length_ - rows_.size());
  for (std::size_t j = 0; j < length_; ++j) {
    if (is_pivot_.empty() || !is_pivot_[j]) out.push_back(w[j]);
  }
  return out;
}

}  // namespace gchar
