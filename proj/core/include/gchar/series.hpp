#pragma once

// Truncated power series with arbitrary-width integer coefficients, and the
// closed forms for the residue field of a complete intersection.

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gchar {

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kDefaultSeriesOrder = 64;

class TruncatedSeries {
 public:
  explicit TruncatedSeries(int order = kDefaultSeriesOrder);
  TruncatedSeries(std::vector<BigInt> coeffs, int order);

  static TruncatedSeries one(int order = kDefaultSeriesOrder);
  // (1 + a t^k)^e with e >= 0.
  static TruncatedSeries binomial_power(long a, int k, int e, int order = kDefaultSeriesOrder);

  int order() const noexcept { return order_; }
  const BigInt& operator[](int n) const;
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;
  // Requires a constant term of +1 or -1 in the divisor; throws InputError otherwise.
  TruncatedSeries operator/(const TruncatedSeries& o) const;
  bool operator==(const TruncatedSeries& o) const = default;

  std::string to_string(int terms) const;

 private:
  std::vector<BigInt> c_;  // c_[0..order]
  int order_;
  BigInt zero_;
};

struct CIShape {
  int embdim = 0;
  int codim = 0;
  int dim() const noexcept { return embdim - codim; }
  bool regular() const noexcept { return codim == 0; }
};

// (1+t)^e / (1-t^2)^c, the Poincare series of k.
TruncatedSeries poincare_series(const CIShape& shape, int order = kDefaultSeriesOrder);

// (1, 0, beta_{d-2}(k), ..., beta_0(k)) for a nonregular shape of dimension d.
std::vector<BigInt> g_betti_of_k(const CIShape& shape);

// Alternating sum of g_betti_of_k from i; for i = 0 and codim 1 or 2 with
// d >= 1 it is checked against the closed form and a mismatch throws ConsistencyError.
BigInt chi_g_of_k(const CIShape& shape, int i = 0);
// 2^{d-1} for codim 1, (d-1) 2^{d-2} + 1 for codim 2, d >= 1; nullopt otherwise.
std::optional<BigInt> chi_g_of_k_closed_form(const CIShape& shape);

BigInt binomial(int a, int b);
// C(a,b) == C(a-2,b-2) + 2 C(a-2,b-1) + C(a-2,b).
bool binomial_identity_check(int a, int b);

}  // namespace gchar
