#pragma once

// Named rings and modules used throughout the tests, the CLI and the
// reproduction suites.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gchar/gdimension.hpp"

namespace gchar {

using CatalogParams = std::map<std::string, std::string>;

struct NamedModule {
  std::string name;
  GradedModule module;
  bool totally_reflexive = false;  // advertised; tests certify it
};

struct NamedFactorization {
  std::string name;
  MatrixFactorization mf;
};

struct CatalogEntry {
  std::string name;
  std::string description;
  GradedRing ring;
  std::vector<NamedModule> modules;
  std::vector<NamedFactorization> factorizations;
  std::vector<std::string> notes;
  // Every indecomposable totally reflexive module is listed (up to twist).
  bool classification_complete = false;

  const GradedModule& module(const std::string& name) const;
  bool has_module(const std::string& name) const;
  // Candidates for epsilon/tau: listed modules plus pairwise sums of the non-free TR ones.
  std::vector<Candidate> candidates() const;
};

struct CatalogInfo {
  std::string name;
  std::string params;  // accepted parameters with defaults
  std::string summary;
};
std::vector<CatalogInfo> catalog_list();
CatalogEntry build(const std::string& name, const CatalogParams& params = {}, std::uint32_t prime = kDefaultPrime);

// Row twists making every entry of phi homogeneous; the smallest is 0.
std::vector<int> infer_row_degrees(const PolyMatrix& phi, const std::vector<int>& weights);
// Coker(phi) over the hypersurface ring; throws InputError unless (phi, psi) is a
// matrix factorization of a relation of the ring.
GradedModule mf_cokernel(const GradedRing& ring, const MatrixFactorization& mf, const std::string& label = {});
// ... -> F -phi-> F -psi-> F -phi-> F, slots 2..-1; exact together with its dual.
ChainComplex complete_resolution_window(const GradedRing& ring, const MatrixFactorization& mf);

// The catalog entry whose ring equals r (same field, weights and relations).
std::optional<CatalogEntry> catalog_entry_for(const GradedRing& r);
// The catalog ring equal to r (same field, weights and relations), with its
// component data attached; r unchanged when nothing matches.
GradedRing attach_catalog_components(const GradedRing& r);

// Deterministic sample of nonzero modules over the entry's ring.
std::vector<Candidate> sample_modules(const CatalogEntry& entry, std::size_t count, std::uint64_t seed);

// Square root of -1 modulo p, if any.
std::optional<Scalar> sqrt_minus_one(const PrimeField& field);

}  // namespace gchar
