#pragma once

// Minimal graded free resolutions and the classical invariants read off them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gchar/complexes.hpp"
#include "gchar/module.hpp"

namespace gchar {

inline constexpr int kDefaultHmax = 8;

struct BettiTable {
  std::map<std::pair<int, int>, long long> entries;  // (n, internal degree) -> beta_{n,d}
  int stages = 0;                                     // homological degrees 0..stages computed
  int dmax = kDefaultDmax;

  long long at(int n, int d) const;
  long long total(int n) const;
  std::vector<long long> totals() const;
  std::string to_string() const;
};

class Resolution {
 public:
  Resolution(GradedModule module, int dmax);

  const GradedModule& module() const noexcept { return module_; }  // minimal presentation of the input
  const GradedRing& ring() const noexcept { return module_.ring(); }
  int dmax() const noexcept { return dmax_; }

  // Extends the resolution through stage n (F_0..F_n and d_1..d_n).
  void extend_to(int n);
  int stages() const noexcept { return static_cast<int>(degrees_.size()) - 1; }
  // True once some F_n = 0 has been reached.
  bool terminated() const noexcept { return terminated_; }

  const std::vector<int>& degrees(int n) const;  // generator degrees of F_n; empty past the end
  const PolyMatrix& differential(int n) const;   // d_n : F_n -> F_{n-1}, n >= 1
  long long beta(int n) const;
  std::vector<long long> betti(int upto) const;
  BettiTable table() const;

  // Slots 0..n of F (free modules) with the differentials between them.
  ChainComplex complex(int n) const;
  // Syz^i(M) = Coker(d_{i+1}) on F_i; Syz^0 = M.
  GradedModule syzygy(int i) const;
  // Every differential entry lies in the maximal ideal.
  bool is_minimal() const;

 private:
  GradedModule module_;
  int dmax_;
  std::vector<std::vector<int>> degrees_;
  std::vector<PolyMatrix> diffs_;  // diffs_[n] = d_n; diffs_[0] unused
  bool terminated_ = false;
  std::vector<int> empty_;
};

Resolution minimal_resolution(const GradedModule& m, int hmax = kDefaultHmax, int dmax = kDefaultDmax);

enum class PdimKind { finite, infinite };
struct PdimVerdict {
  PdimKind kind = PdimKind::infinite;
  int value = 0;  // meaningful when finite
  bool finite() const noexcept { return kind == PdimKind::finite; }
};
PdimVerdict pdim(const Resolution& res);  // extends res to depth(R)+1 if needed
PdimVerdict pdim(const GradedModule& m, int dmax = kDefaultDmax);

// H^i of Hom(F, R).
GradedModule ext_against_ring(Resolution& res, int i);
bool ext_against_ring_vanishes(Resolution& res, int i);

// Minimal resolution of k, shared per ring and window.
const Resolution& residue_field_resolution(const GradedRing& ring, int stages, int dmax = kDefaultDmax);

// Ext^i(k, M) vanishes?
bool ext_from_residue_vanishes(const GradedModule& m, int i, int dmax = kDefaultDmax);
int depth(const GradedModule& m, int dmax = kDefaultDmax);
inline int ring_depth(const GradedRing& r) { return r.krull_dim(); }

// chi_i(M) = sum_{n >= i} (-1)^{n-i} beta_n(M); requires finite pdim.
long long chi_classical(const Resolution& res, int i = 0);
long long chi_classical(const GradedModule& m, int i = 0, int dmax = kDefaultDmax);

struct RankOptions {
  int trials = 5;
  std::uint64_t seed = 0;
  unsigned extension_degree = 4;
  int dmax = kDefaultDmax;
};
struct RankResult {
  std::optional<long long> value;  // nullopt: M has no rank
  std::string method;              // "chi" or "components"
  std::string reason;              // why the rank is undefined, if it is
  std::vector<long long> per_component;
};
// Throws UnsupportedError when pdim is infinite and the ring carries no component data.
RankResult rank(const GradedModule& m, const RankOptions& opts = {});

struct FreeSummand {
  std::size_t f_rank = 0;
  GradedModule complement;
  std::vector<std::size_t> split_generators;  // generators of the minimal presentation that span the free part
};
FreeSummand f_rank(const GradedModule& m, int dmax = kDefaultDmax);

}  // namespace gchar
