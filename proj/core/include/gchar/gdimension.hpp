#pragma once

// Total reflexivity, G-dimension, G-approximations and the G-Euler
// characteristic, over complete-intersection (hence Gorenstein) rings.

#include <optional>
#include <string>
#include <vector>

#include "gchar/complexes.hpp"
#include "gchar/resolution.hpp"

namespace gchar {

struct ReflexivityCertificate {
  bool totally_reflexive = false;
  bool biduality_injective = false;
  bool biduality_surjective = false;
  int nonvanishing_ext = -1;       // smallest i in 1..dim R with Ext^i(M,R) != 0, or -1
  int nonvanishing_dual_ext = -1;  // same for M*
};
ReflexivityCertificate total_reflexivity(const GradedModule& m, int dmax = kDefaultDmax);
bool is_totally_reflexive(const GradedModule& m, int dmax = kDefaultDmax);

// sup{ i : Ext^i(M,R) != 0 }, checked against depth R - depth M.
int gdim(const GradedModule& m, int dmax = kDefaultDmax);

// 0 -> G -> R^b -> G' -> 0 with the map given by the generators of G*.
struct Cosyzygy {
  std::size_t b = 0;
  std::vector<int> degrees;  // of R^b
  PolyMatrix embedding;      // b x gens(G)
  GradedModule cokernel;
};
Cosyzygy cosyzygy(const GradedModule& g, int dmax = kDefaultDmax, bool certify = true);

// 0 -> K -> G -> M -> 0. `iota` has columns in G generators, `pi` in M generators.
struct GApproximation {
  GradedModule m;  // minimal presentation of the input
  GradedModule g;
  GradedModule k;
  PolyMatrix iota;
  PolyMatrix pi;
  int gdim = 0;
  bool minimal = false;
};
GApproximation g_approximation(const GradedModule& m, int dmax = kDefaultDmax);
// Exactness, total reflexivity of G and finite pdim of K; throws ConsistencyError.
void certify(const GApproximation& a, int dmax = kDefaultDmax);

struct GBetti {
  std::vector<long long> values;  // beta^G_0 .. beta^G_{gdim}
  long long at(int n) const { return n >= 0 && n < static_cast<int>(values.size()) ? values[static_cast<std::size_t>(n)] : 0; }
  long long chi(int i = 0) const;
};
// beta^G_0 = beta_0(M), beta^G_1 = beta_0(M) - beta_0(G) + beta_0(K),
// beta^G_n = beta_{n-1}(K); cross-checked against Hom(-,k) of the strict resolution.
GBetti g_betti(const GApproximation& a, int dmax = kDefaultDmax);
GBetti g_betti(const GradedModule& m, int dmax = kDefaultDmax);
long long chi_g(const GradedModule& m, int i = 0, int dmax = kDefaultDmax);

struct StrictResolution {
  ChainComplex complex;  // slot 0 totally reflexive, slots >= 1 free
  GradedModule target;
  PolyMatrix augmentation;
  ChainComplex augmented() const;
};
StrictResolution strict_resolution(const GApproximation& a, int dmax = kDefaultDmax);
StrictResolution strict_resolution(const GradedModule& m, int dmax = kDefaultDmax);

// Dimensions of H^n(Hom(C, k)) for a complex whose slots are minimally presented.
std::vector<long long> hom_to_residue_ranks(const ChainComplex& c);
long long alternating_beta0(const ChainComplex& c);

// Hom(H, C) slotwise, with the induced maps.
ChainComplex hom_into(const GradedModule& h, const ChainComplex& c, int dmax = kDefaultDmax);

enum class Properness { not_proper, proper_relative_to_witnesses };
struct PropernessReport {
  Properness verdict = Properness::not_proper;
  long long alternating_sum = 0;
  long long chi_g = 0;
  std::vector<std::string> witnesses_passed;
};
// `resolution` is augmented: slots >= 0 totally reflexive, slot -1 the module.
PropernessReport properness_test(const ChainComplex& resolution, const std::vector<GradedModule>& witnesses,
                                 int dmax = kDefaultDmax);

struct TorG {
  std::vector<GradedModule> modules;  // Tor^G_n(M,N), n = 0..
  std::vector<long long> lengths;
  long long chi = 0;
};
TorG tor_g(const GradedModule& m, const GradedModule& n, int dmax = kDefaultDmax);
long long chi_g_pair(const GradedModule& m, const GradedModule& n, int dmax = kDefaultDmax);

// chi^G(M/sM) = chi^G(M) - f-rank(M) for totally reflexive M and regular s,
// realized through Coker of the first differential of Cone(T -s-> T).
struct RegularQuotientReport {
  long long chi_g_m = 0;
  long long f_rank = 0;
  long long chi_g_quotient_cone = 0;    // beta_0(Coker d1 of the cone) - b
  long long chi_g_quotient_engine = 0;  // G-approximation of M/sM
  std::size_t b = 0;
  bool holds = false;
};
RegularQuotientReport quotient_by_regular(const GradedModule& m, const Polynomial& s, int dmax = kDefaultDmax);

// M/sM as a module over R/(s).
GradedModule base_change(const GradedModule& m, const GradedRing& quotient_ring);
bool is_regular_on(const GradedModule& m, const Polynomial& s, int dmax = kDefaultDmax);
struct BaseChangeReport {
  GBetti over_r;
  GBetti over_quotient;
  bool equal = false;
};
BaseChangeReport base_change_betti(const GradedModule& m, const Polynomial& s, int dmax = kDefaultDmax);

// phi * psi = psi * phi = f * I over the ambient polynomial ring.
struct MatrixFactorization {
  PolyMatrix phi;
  PolyMatrix psi;
  Polynomial f;
  bool is_valid() const;
  bool is_reduced() const;  // no unit entries
};

// Everything the property suites need about one module.
struct Analysis {
  int gdim = 0;
  PdimVerdict pdim;
  GBetti g_betti;
  std::optional<long long> rank;
  std::string rank_status;  // exact, probabilistic(seed=..), undefined: ...
  std::size_t f_rank = 0;
  long long beta0 = 0;
};
Analysis analyze(const GradedModule& m, const RankOptions& opts = {});

struct Candidate {
  std::string name;
  GradedModule module;
};
struct EpsilonTau {
  std::optional<long long> epsilon;
  std::optional<long long> tau;
  std::string epsilon_witness;
  std::string tau_witness;
  std::size_t considered = 0;
};
// Infima of chi^G and chi^G - rank over candidates with G-dim <= i and infinite pdim.
EpsilonTau epsilon_tau(const std::vector<Candidate>& family, int i, const RankOptions& opts = {});

}  // namespace gchar
