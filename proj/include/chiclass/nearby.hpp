#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chiclass/classes.hpp"
#include "chiclass/ypoly.hpp"

namespace chiclass {

// One stratum S with its compactly supported genus and the genus of the
// vanishing-cycle stalk along it.
struct StratumGenus {
  std::string label;
  YPoly chi_c;
  YPoly local_factor;
};

// sum_S chi_c(S) * local_factor(S).
YPoly strat_additivity(std::span<const StratumGenus> strata);

// (|J|, chi_y(E_{I,J})): a closed stratum of the boundary of a smooth SNC
// compactification, J = the set of boundary components it lies on.
struct CoverPiece {
  int codim = 0;
  YPoly chi_y;
};

// sum_J (-1)^{|J|} chi_y(E_{I,J}): chi_y with compact support of the open part.
YPoly incl_excl_open(std::span<const CoverPiece> table);

struct SncComponent {
  std::string id;
  int multiplicity = 1;
};

// Data for one nonempty I: which components meet there, whether E_I lies over
// the singular locus, the compactified cover table, and optionally the
// compactly supported genus of the uncovered stratum E_I° (used for the
// A'Campo cross-check only).
struct SncStratum {
  std::vector<std::string> components;
  bool over_sigma = false;
  std::vector<CoverPiece> cover;
  std::optional<YPoly> base_chi_c;
};

struct SncResolution {
  std::vector<SncComponent> components;
  std::vector<SncStratum> strata;
  YPoly sigma_chi_y;                   // chi_y(Sigma)
  YPoly sigma_cap_hyperplane_chi_y;    // chi_y(Sigma cap X')
};

struct NearbyGenus {
  YPoly psi;           // over every supplied stratum
  YPoly psi_on_sigma;  // restricted to strata with over_sigma
  YPoly phi_on_sigma;  // psi_on_sigma - chi_y(Sigma) + chi_y(Sigma cap X')
  std::vector<std::string> notes;
};

// gcd of the multiplicities of the components of the stratum.
int stratum_gcd(const SncResolution& r, const SncStratum& s);

// nu(I,i) = C(|I|-1, i): multiplicity of Q(-i) in H^i of the nearby stalk.
Integer nu_multiplicity(int stratum_size, int i);

// sum_i (-1)^i nu(I,i) (-y)^i, the chi_y weight of a stratum of size |I|.
YPoly nearby_stalk_weight(int stratum_size);

NearbyGenus motivic_nearby_degree0(const SncResolution& r);

// sum over one-component strata of m_i * e(E_i°); the Euler characteristic
// the psi genus must specialize to at y = -1.
Rat acampo_euler(const SncResolution& r, bool over_sigma_only);

// Smooth ambient Z = product of projective spaces with an SNC divisor whose
// components have the given multidegrees.
struct LogPair {
  RingDesc ring;
  std::vector<std::vector<int>> divisors;
};

// sum_q (-1)^q td_{(1+y)*}[Omega^q_Z(log D)(-D)] (-y)^q, the Hirzebruch class of
// j_! Q_U for U = Z \ D with trivial coefficients.
HomologyClass log_dr_trivial(const LogPair& pair);

}  // namespace chiclass
