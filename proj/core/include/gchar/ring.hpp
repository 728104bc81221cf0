#pragma once

// Weighted-graded quotients k[x_1..x_n]/(f_1..f_c) realized degree by degree.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "gchar/linalg.hpp"
#include "gchar/polynomial.hpp"

namespace gchar {

// An irreducible component of Spec R given by a polynomial parametrization
// k[t_1..t_m] -> k[x]; `primary` marks a nonreduced but primary zero ideal.
struct ComponentData {
  std::string name;
  std::size_t nparams = 1;
  std::vector<Polynomial> parametrization;
  bool reduced = true;
};

struct RingPiece {
  int degree = 0;
  std::vector<Monomial> monomials;
  std::map<Monomial, std::size_t> index;
  std::vector<std::size_t> basis;
  std::vector<Monomial> basis_monomials;
  Matrix normal_form;  // ambient monomial -> coordinates on the basis

  std::size_t dim() const noexcept { return basis.size(); }
};

class GradedRing {
 public:
  // Validates homogeneity and certifies that the relations form a regular
  // sequence by comparing Hilbert functions on a window.
  GradedRing(PrimeField field, std::vector<std::string> names, std::vector<int> weights,
             std::vector<Polynomial> relations, std::string label = {});

  const PrimeField& field() const noexcept { return data_->field; }
  std::size_t nvars() const noexcept { return data_->weights.size(); }
  const std::vector<std::string>& names() const noexcept { return data_->names; }
  const std::vector<int>& weights() const noexcept { return data_->weights; }
  const std::vector<Polynomial>& relations() const noexcept { return data_->relations; }
  const std::vector<int>& relation_degrees() const noexcept { return data_->relation_degrees; }
  const std::string& label() const noexcept { return data_->label; }
  std::uint64_t id() const noexcept { return data_->id; }

  int krull_dim() const noexcept { return data_->krull_dim; }
  int embedding_dim() const noexcept { return data_->embedding_dim; }
  int codim() const noexcept { return embedding_dim() - krull_dim(); }
  bool is_regular() const noexcept { return codim() == 0; }
  int max_weight() const noexcept;
  int max_relation_degree() const noexcept;

  const RingPiece& piece(int d) const;
  std::size_t dim(int d) const;

  Polynomial zero() const { return Polynomial(nvars(), field()); }
  Polynomial one() const { return Polynomial::constant(nvars(), field(), 1); }
  Polynomial var(std::size_t i) const { return Polynomial::variable(nvars(), field(), i); }

  // Adds c * f * mu (f homogeneous, result of degree d) to out[offset ...].
  void accumulate(const Polynomial& f, const Monomial& mu, int d, std::span<Scalar> out) const;
  std::vector<Scalar> coordinates(const Polynomial& f, int d) const;
  Polynomial from_coordinates(std::span<const Scalar> coords, int d) const;
  Polynomial normal_form(const Polynomial& f) const;
  bool is_zero(const Polynomial& f) const { return normal_form(f).is_zero(); }

  // R/(s) for a homogeneous R-regular s; throws PreconditionError otherwise.
  GradedRing quotient(const Polynomial& s, std::string label = {}) const;

  const std::vector<ComponentData>& components() const noexcept { return *components_; }
  GradedRing with_components(std::vector<ComponentData> comps) const;

  bool same_as(const GradedRing& o) const;
  std::string describe() const;

 private:
  struct Data {
    PrimeField field;
    std::vector<std::string> names;
    std::vector<int> weights;
    std::vector<Polynomial> relations;
    std::vector<int> relation_degrees;
    std::string label;
    std::uint64_t id = 0;
    int krull_dim = 0;
    int embedding_dim = 0;
    mutable std::mutex mutex;
    mutable std::map<int, std::unique_ptr<RingPiece>> pieces;
  };

  std::unique_ptr<RingPiece> build_piece(int d) const;

  std::shared_ptr<Data> data_;
  std::shared_ptr<const std::vector<ComponentData>> components_;
};

// Coefficients of prod(1 - t^e_j) / prod(1 - t^w_i) up to t^order.
std::vector<long long> complete_intersection_hilbert(const std::vector<int>& weights,
                                                     const std::vector<int>& relation_degrees, int order);

}  // namespace gchar
