#include "gchar/series.hpp"

#include <sstream>

#include "gchar/error.hpp"

namespace gchar {

TruncatedSeries::TruncatedSeries(int order) : c_(static_cast<std::size_t>(order) + 1), order_(order) {
  if (order < 0) throw InputError("series order must be nonnegative");
}

TruncatedSeries::TruncatedSeries(std::vector<BigInt> coeffs, int order) : TruncatedSeries(order) {
  for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = std::move(coeffs[i]);
}

TruncatedSeries TruncatedSeries::one(int order) {
  TruncatedSeries s(order);
  s.c_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::binomial_power(long a, int k, int e, int order) {
  if (e < 0 || k <= 0) throw InputError("binomial_power: need e >= 0 and k > 0");
  TruncatedSeries s(order);
  BigInt ap = 1;
  for (int j = 0; j <= e && j * k <= order; ++j) {
    s.c_[static_cast<std::size_t>(j * k)] = binomial(e, j) * ap;
    ap *= a;
  }
  return s;
}

const BigInt& TruncatedSeries::operator[](int n) const {
  if (n < 0 || n > order_) return zero_;
  return c_[static_cast<std::size_t>(n)];
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  TruncatedSeries r(std::min(order_, o.order_));
  for (int i = 0; i <= r.order_; ++i) r.c_[static_cast<std::size_t>(i)] = (*this)[i] + o[i];
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  TruncatedSeries r(std::min(order_, o.order_));
  for (int i = 0; i <= r.order_; ++i) r.c_[static_cast<std::size_t>(i)] = (*this)[i] - o[i];
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  TruncatedSeries r(std::min(order_, o.order_));
  for (int i = 0; i <= r.order_; ++i) {
    if ((*this)[i] == 0) continue;
    for (int j = 0; i + j <= r.order_; ++j) r.c_[static_cast<std::size_t>(i + j)] += (*this)[i] * o[j];
  }
  return r;
}

TruncatedSeries TruncatedSeries::operator/(const TruncatedSeries& o) const {
  const BigInt& u = o[0];
  if (u != 1 && u != -1) throw InputError("series division needs a unit constant term");
  TruncatedSeries q(std::min(order_, o.order_));
  for (int n = 0; n <= q.order_; ++n) {
    BigInt acc = (*this)[n];
    for (int j = 1; j <= n; ++j) acc -= o[j] * q[n - j];
    q.c_[static_cast<std::size_t>(n)] = acc * u;  // u^{-1} == u
  }
  return q;
}

std::string TruncatedSeries::to_string(int terms) const {
  std::ostringstream os;
  for (int i = 0; i < terms && i <= order_; ++i) os << (i ? "," : "") << (*this)[i];
  return os.str();
}

TruncatedSeries poincare_series(const CIShape& shape, int order) {
  if (shape.embdim < 0 || shape.codim < 0 || shape.codim > shape.embdim)
    throw InputError("need e >= c >= 0 for a complete-intersection shape");
  TruncatedSeries num = TruncatedSeries::binomial_power(1, 1, shape.embdim, order);
  TruncatedSeries den = TruncatedSeries::binomial_power(-1, 2, shape.codim, order);
  return num / den;
}

std::vector<BigInt> g_betti_of_k(const CIShape& shape) {
  if (shape.regular()) throw PreconditionError("relative Betti numbers of k need a nonregular ring");
  const int d = shape.dim();
  if (d < 0) throw InputError("negative dimension");
  TruncatedSeries p = poincare_series(shape, std::max(d, 0) + 1);
  std::vector<BigInt> out{1};
  if (d >= 1) out.emplace_back(0);
  for (int n = 2; n <= d; ++n) out.push_back(p[d - n]);
  return out;
}

std::optional<BigInt> chi_g_of_k_closed_form(const CIShape& shape) {
  const int d = shape.dim();
  if (d < 1) return std::nullopt;
  if (shape.codim == 1) return BigInt(1) << (d - 1);
  if (shape.codim == 2) {
    if (d == 1) return BigInt(1);
    return BigInt(d - 1) * (BigInt(1) << (d - 2)) + 1;
  }
  return std::nullopt;
}

BigInt chi_g_of_k(const CIShape& shape, int i) {
  auto b = g_betti_of_k(shape);
  BigInt s = 0;
  for (int n = std::max(i, 0); n < static_cast<int>(b.size()); ++n) {
    if ((n - i) % 2 == 0) s += b[static_cast<std::size_t>(n)];
    else s -= b[static_cast<std::size_t>(n)];
  }
  if (i == 0) {
    if (auto cf = chi_g_of_k_closed_form(shape); cf && *cf != s)
      throw ConsistencyError("chi^G(k) alternating sum " + s.str() + " differs from the closed form " + cf->str());
  }
  return s;
}

BigInt binomial(int a, int b) {
  if (a < 0 || b < 0 || b > a) return 0;
  BigInt r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

bool binomial_identity_check(int a, int b) {
  if (a < 2) throw InputError("binomial identity needs a >= 2");
  return binomial(a, b) == binomial(a - 2, b - 2) + 2 * binomial(a - 2, b - 1) + binomial(a - 2, b);
}

}  // namespace gchar
