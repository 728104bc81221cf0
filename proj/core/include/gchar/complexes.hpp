#pragma once

// Bounded chain complexes of graded modules with degree-0 differentials.

#include <map>
#include <string>
#include <vector>

#include "gchar/module.hpp"

namespace gchar {

class ChainComplex {
 public:
  explicit ChainComplex(GradedRing ring) : ring_(std::move(ring)) {}

  const GradedRing& ring() const noexcept { return ring_; }

  void set_slot(int n, GradedModule m);
  // Differential from slot n to slot n-1; columns are images of slot-n generators.
  void set_differential(int n, PolyMatrix d);

  bool has_slot(int n) const { return slots_.count(n) > 0; }
  const GradedModule& slot(int n) const;
  PolyMatrix differential(int n) const;
  ModuleMap differential_map(int n) const;

  bool empty() const noexcept { return slots_.empty(); }
  int min_index() const;
  int max_index() const;
  std::vector<int> indices() const;

  // Throws ConsistencyError unless every differential is homogeneous,
  // well defined, and consecutive differentials compose to zero.
  void validate() const;
  bool is_valid(std::string* reason = nullptr) const;

 private:
  GradedRing ring_;
  std::map<int, GradedModule> slots_;
  std::map<int, PolyMatrix> diffs_;
  GradedModule zero_ = GradedModule::zero(ring_);
};

struct ChainMap {
  ChainComplex source;
  ChainComplex target;
  std::map<int, PolyMatrix> components;  // slot n of source -> slot n of target

  PolyMatrix component(int n) const;
};

bool is_chain_map(const ChainMap& f);

ChainComplex shift(const ChainComplex& c);
// The complex with a single module in slot 0 (or slot n).
ChainComplex single(const GradedModule& m, int n = 0);
GradedModule homology(const ChainComplex& c, int n, int dmax = kDefaultDmax);
bool is_exact(const ChainComplex& c, int dmax = kDefaultDmax);
ChainComplex cone(const ChainMap& f);
ChainComplex tensor(const ChainComplex& a, const ChainComplex& b);
// Slotwise tensor with a module: C tensor N.
ChainComplex tensor(const ChainComplex& c, const GradedModule& n);
ChainComplex koszul(const GradedRing& ring, const std::vector<Polynomial>& elems);
// Hom(-,R) slotwise, reindexed so that slot n goes to slot (top - n).
ChainComplex dualize(const ChainComplex& c, int dmax = kDefaultDmax);
ChainComplex hard_truncation(const ChainComplex& c, int n);
// Keeps slots below d and puts the image of the d-th differential in slot d.
ChainComplex soft_truncation(const ChainComplex& c, int d, int dmax = kDefaultDmax);
// The complex c with its augmentation to H_0 placed in slot -1.
ChainComplex augment(const ChainComplex& c, const GradedModule& target, const PolyMatrix& augmentation);

struct AlternatingSums {
  long long slots = 0;
  long long homology = 0;
};
// Throws PreconditionError when a slot has no finite-length certificate, and
// ConsistencyError when the two sums differ.
AlternatingSums alternating_sum(const ChainComplex& c, int dmax = kDefaultDmax);

}  // namespace gchar
