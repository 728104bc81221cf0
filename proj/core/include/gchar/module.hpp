#pragma once

// Finitely generated graded modules Coker(F1 -> F0) and the degreewise
// algorithms built on them: kernels, minimal generators, Hom, tensor.

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "gchar/linalg.hpp"
#include "gchar/polynomial.hpp"
#include "gchar/ring.hpp"

namespace gchar {

inline constexpr int kDefaultDmax = 40;

using Column = std::vector<Polynomial>;

// Elements of a module, as columns over its generators, with their degrees.
struct Generators {
  PolyMatrix columns;
  std::vector<int> degrees;

  std::size_t size() const noexcept { return degrees.size(); }
};

struct ModulePiece {
  int degree = 0;
  std::vector<std::size_t> offsets;
  std::size_t free_dim = 0;
  Reducer relations{0, PrimeField{}};

  std::size_t dim() const noexcept { return free_dim - relations.rank(); }
};

class GradedModule {
 public:
  // Coker(relations) where generator i has degree gen_degrees[i]. Entries are
  // reduced to normal form; zero columns are dropped; inhomogeneous entries throw.
  GradedModule(GradedRing ring, std::vector<int> gen_degrees, PolyMatrix relations, std::string label = {});

  static GradedModule free(const GradedRing& ring, std::vector<int> degrees, std::string label = {});
  static GradedModule zero(const GradedRing& ring);

  const GradedRing& ring() const noexcept { return ring_; }
  const std::vector<int>& degrees() const noexcept { return degrees_; }
  std::size_t num_generators() const noexcept { return degrees_.size(); }
  const PolyMatrix& relations() const noexcept { return relations_; }
  const std::vector<int>& relation_degrees() const noexcept { return relation_degrees_; }
  bool has_free_presentation() const noexcept { return relations_.cols() == 0; }
  const std::string& label() const noexcept { return label_; }
  GradedModule relabeled(std::string label) const;

  int min_degree() const;
  int max_degree() const;

  const ModulePiece& piece(int d) const;
  std::size_t dim(int d) const { return piece(d).dim(); }

  // Coordinates in F0_d of mu * col.
  std::vector<Scalar> realize(const Column& col, const Monomial& mu, int d) const;
  std::vector<Scalar> realize(const Column& col, int d) const;
  // Coordinates of mu * col modulo the relations.
  std::vector<Scalar> quotient_coordinates(const Column& col, const Monomial& mu, int d) const;
  Column to_column(std::span<const Scalar> free_coords, int d) const;
  Column unit(std::size_t i) const;
  Column zero_column() const;
  bool is_zero_element(const Column& col, int d) const;

  // Degree of a column of polynomials against these generator degrees; nullopt for zero.
  std::optional<int> column_degree(const Column& col) const;

 private:
  GradedRing ring_;
  std::vector<int> degrees_;
  PolyMatrix relations_;
  std::vector<int> relation_degrees_;
  std::string label_;
  struct Cache {
    std::mutex mutex;
    std::map<int, std::unique_ptr<ModulePiece>> pieces;
  };
  std::shared_ptr<Cache> cache_;
};

PolyMatrix normalize(const GradedRing& ring, const PolyMatrix& m);
Column normalize(const GradedRing& ring, const Column& c);
Generators make_generators(const GradedModule& ambient, const PolyMatrix& columns);

// Degree through which kernel() searches for new generators before it stops.
int kernel_search_bound(const GradedModule& target, const std::vector<int>& source_degrees, const PolyMatrix& map);

// Minimal generators of ker(F -> target), F free on source_degrees, the map
// given by the columns of `map`. Throws TruncationError beyond dmax.
Generators kernel(const GradedModule& target, const std::vector<int>& source_degrees, const PolyMatrix& map,
                  int dmax = kDefaultDmax);

// Indices of a minimal generating subset of the submodule spanned by gens.
std::vector<std::size_t> minimal_subset(const GradedModule& ambient, const Generators& gens);

// Solves sum_l c_l gens_l == element (mod relations) for homogeneous c_l.
std::optional<Column> express(const GradedModule& ambient, const Generators& gens, const Column& element, int degree);
bool in_submodule(const GradedModule& ambient, const Generators& gens, const Column& element, int degree);

struct Pruned {
  GradedModule module;
  std::vector<std::size_t> kept;  // original generators kept
  PolyMatrix tau;                 // original generators expressed on the kept ones
};
Pruned prune(const GradedModule& m);
GradedModule minimal_presentation(const GradedModule& m);
std::size_t beta0(const GradedModule& m);

// The submodule of ambient generated by gens, as a module on those generators.
GradedModule submodule(const GradedModule& ambient, const Generators& gens, int dmax = kDefaultDmax);
// ambient / (gens)
GradedModule quotient(const GradedModule& ambient, const Generators& gens);
GradedModule direct_sum(const GradedModule& a, const GradedModule& b);
GradedModule direct_sum(const std::vector<GradedModule>& parts, const GradedRing& ring);
// M(s): generator degrees shifted down by s.
GradedModule twist(const GradedModule& m, int s);
GradedModule tensor(const GradedModule& a, const GradedModule& b);
GradedModule residue_field(const GradedRing& ring);
GradedModule maximal_ideal(const GradedRing& ring);
GradedModule ring_module(const GradedRing& ring);
// R/I and I for I generated by homogeneous polynomials.
GradedModule cyclic_quotient(const GradedRing& ring, const std::vector<Polynomial>& ideal);
GradedModule ideal_module(const GradedRing& ring, const std::vector<Polynomial>& ideal, int dmax = kDefaultDmax);
std::vector<Polynomial> power_of_maximal_ideal(const GradedRing& ring, int t);

bool is_zero(const GradedModule& m);

struct HomResult {
  GradedModule module;
  // Generators of Hom inside the direct sum over generators i of source of target(a_i):
  // row i * target.num_generators() + k.
  Generators embedding;
  std::size_t source_gens = 0;
  std::size_t target_gens = 0;
};
HomResult hom(const GradedModule& source, const GradedModule& target, int dmax = kDefaultDmax);
HomResult dual(const GradedModule& m, int dmax = kDefaultDmax);

// Maps between modules: columns are images of source generators in target.
struct ModuleMap {
  GradedModule source;
  GradedModule target;
  PolyMatrix matrix;
};
bool is_well_defined(const ModuleMap& f);
bool is_zero_map(const ModuleMap& f);
bool is_injective(const ModuleMap& f, int dmax = kDefaultDmax);
bool is_surjective(const ModuleMap& f);
ModuleMap compose(const ModuleMap& g, const ModuleMap& f);
// Kernel of f as a submodule of the source; columns in source generators.
Generators kernel_of(const ModuleMap& f, int dmax = kDefaultDmax);
GradedModule image_module(const ModuleMap& f, int dmax = kDefaultDmax);
GradedModule cokernel_module(const ModuleMap& f);

struct LengthResult {
  bool finite = false;
  long long length = 0;
  int certified_through = 0;  // degree where the vanishing certificate fired
};
LengthResult length(const GradedModule& m, int dmax = kDefaultDmax);

// Entry (l, i) is the constant coefficient of phi_l(x_i), where phi_l are the
// generators of dual(G) and x_i are elements of G.
Matrix evaluation_pairing(const HomResult& dual_of_g, const Generators& elements);

}  // namespace gchar
