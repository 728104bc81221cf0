#pragma once

// Dense exact linear algebra over prime fields GF(p).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace gchar {

using Scalar = std::uint32_t;

inline constexpr std::uint32_t kDefaultPrime = 13;

bool is_prime(std::uint32_t n);

class PrimeField {
 public:
  // Throws InputError unless p is a prime below 2^16.
  explicit PrimeField(std::uint32_t p = kDefaultPrime);

  std::uint32_t prime() const noexcept { return p_; }

  Scalar add(Scalar a, Scalar b) const noexcept {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Scalar inv(Scalar a) const;  // throws on a == 0
  Scalar pow(Scalar a, std::uint64_t e) const noexcept;
  Scalar from_int(long long v) const noexcept;
  // Representative in (-p/2, p/2], used for printing.
  long long to_signed(Scalar a) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, PrimeField field);

  static Matrix identity(std::size_t n, PrimeField field);
  static Matrix from_rows(const std::vector<std::vector<long long>>& rows, PrimeField field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PrimeField& field() const noexcept { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::vector<Scalar> column(std::size_t c) const;

  Matrix transpose() const;
  bool is_zero() const noexcept;

  // Appends a row / column; the new entries are given explicitly.
  void append_row(std::span<const Scalar> values);
  void append_column(std::span<const Scalar> values);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend std::vector<Scalar> operator*(const Matrix& a, std::span<const Scalar> x);
  friend bool operator==(const Matrix& a, const Matrix& b) noexcept;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  PrimeField field_{};
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;

  std::size_t rank() const noexcept { return pivots.size(); }
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
// Columns span the right null space.
Matrix kernel_basis(const Matrix& m);
// Some x with m * x == b, or nullopt. Throws InputError on a length mismatch.
std::optional<std::vector<Scalar>> solve(const Matrix& m, std::span<const Scalar> b);

// Incremental row space. Vectors are reduced against rows in insertion order,
// which leaves every stored pivot coordinate zero.
class Reducer {
 public:
  Reducer(std::size_t length, PrimeField field) : length_(length), field_(field) {}

  std::size_t length() const noexcept { return length_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  void reduce(std::span<Scalar> v) const;
  // Adds v to the span; returns false when v was already in it.
  bool add(std::vector<Scalar> v);
  bool contains(std::span<const Scalar> v) const;

  // Coordinates of v modulo the span, on the non-pivot positions.
  std::vector<Scalar> quotient_coordinates(std::span<const Scalar> v) const;
  std::vector<std::size_t> free_positions() const;

 private:
  std::size_t length_;
  PrimeField field_;
  std::vector<std::vector<Scalar>> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<char> is_pivot_;
};

}  // namespace gchar
