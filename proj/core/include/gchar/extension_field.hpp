#pragma once

// GF(p^k) as GF(p)[z]/(g) for a monic irreducible g, used for generic-point
// rank evaluation.

#include <cstdint>
#include <random>
#include <vector>

#include "gchar/linalg.hpp"
#include "gchar/polynomial.hpp"

namespace gchar {

class ExtensionField {
 public:
  using Elem = std::vector<Scalar>;  // coefficients of 1, z, ..., z^{k-1}

  ExtensionField(PrimeField base, unsigned degree);

  const PrimeField& base() const noexcept { return base_; }
  unsigned degree() const noexcept { return k_; }
  std::uint64_t order() const noexcept { return order_; }
  const std::vector<Scalar>& modulus() const noexcept { return modulus_; }

  Elem zero() const { return Elem(k_, 0); }
  Elem one() const;
  Elem embed(Scalar a) const;
  bool is_zero(const Elem& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem pow(Elem a, std::uint64_t e) const;
  Elem inv(const Elem& a) const;
  Elem random(std::mt19937_64& rng) const;

  Elem evaluate(const Polynomial& f, const std::vector<Elem>& point) const;

 private:
  PrimeField base_;
  unsigned k_;
  std::uint64_t order_;
  std::vector<Scalar> modulus_;  // monic, length k+1
};

bool is_irreducible(const std::vector<Scalar>& poly, const PrimeField& field);

// Rank of a matrix over GF(p^k) given row-major.
std::size_t rank(const ExtensionField& f, std::vector<std::vector<ExtensionField::Elem>> rows);

}  // namespace gchar
