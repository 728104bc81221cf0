#pragma once

// Sparse multivariate polynomials over GF(p).

#include <map>
#include <string>
#include <vector>

#include "gchar/linalg.hpp"

namespace gchar {

using Monomial = std::vector<int>;

int weighted_degree(const Monomial& m, const std::vector<int>& weights);
Monomial monomial_product(const Monomial& a, const Monomial& b);
// All monomials of weighted degree d, in descending lexicographic order.
std::vector<Monomial> monomials_of_degree(const std::vector<int>& weights, int d);

class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar, std::greater<>>;

  Polynomial() = default;
  Polynomial(std::size_t nvars, PrimeField field) : nvars_(nvars), field_(field) {}

  static Polynomial constant(std::size_t nvars, PrimeField field, long long c);
  static Polynomial variable(std::size_t nvars, PrimeField field, std::size_t i);
  static Polynomial monomial(PrimeField field, const Monomial& m, Scalar c = 1);

  std::size_t nvars() const noexcept { return nvars_; }
  const PrimeField& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  Scalar coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, Scalar c);

  // Throws InputError when the polynomial is not homogeneous. Zero has degree 0.
  int degree(const std::vector<int>& weights) const;
  bool is_homogeneous(const std::vector<int>& weights) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial scaled(Scalar c) const;
  Polynomial times_monomial(const Monomial& m, Scalar c = 1) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_ && (a.terms_.empty() || a.nvars_ == b.nvars_);
  }

  Polynomial pow(unsigned e) const;
  // Substitutes polys[i] for variable i; all substitutes share one ambient ring.
  Polynomial substitute(const std::vector<Polynomial>& polys) const;

  std::string to_string(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_ = 0;
  PrimeField field_{};
  Terms terms_;
};

// Matrix of polynomials; a map between free modules (rows = target generators).
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars, PrimeField field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::vector<Polynomial> column(std::size_t c) const;
  void append_column(const std::vector<Polynomial>& col);
  PolyMatrix transpose() const;
  PolyMatrix select_columns(const std::vector<std::size_t>& idx) const;
  PolyMatrix select_rows(const std::vector<std::size_t>& idx) const;
  bool is_zero() const;

  static PolyMatrix identity(std::size_t n, std::size_t nvars, PrimeField field);
  static PolyMatrix hstack(const PolyMatrix& a, const PolyMatrix& b);
  static PolyMatrix vstack(const PolyMatrix& a, const PolyMatrix& b);
  static PolyMatrix block_diagonal(const PolyMatrix& a, const PolyMatrix& b);
  static PolyMatrix kronecker(const PolyMatrix& a, const PolyMatrix& b);

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

  PolyMatrix scaled(const Polynomial& s) const;
  PolyMatrix negated() const;

  std::size_t nvars() const noexcept { return nvars_; }
  const PrimeField& field() const noexcept { return field_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t nvars_ = 0;
  PrimeField field_{};
  std::vector<Polynomial> entries_;
};

}  // namespace gchar
