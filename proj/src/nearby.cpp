#include "chiclass/nearby.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "chiclass/errors.hpp"
#include "chiclass/genus.hpp"

namespace chiclass {

YPoly strat_additivity(std::span<const StratumGenus> strata) {
  YPoly out;
  for (const auto& s : strata) out += s.chi_c * s.local_factor;
  return out;
}

YPoly incl_excl_open(std::span<const CoverPiece> table) {
  const bool has_closure =
      std::any_of(table.begin(), table.end(), [](const CoverPiece& p) { return p.codim == 0; });
  if (!has_closure) throw DomainError("inclusion-exclusion table lacks the |J| = 0 entry");
  YPoly out;
  for (const auto& piece : table) {
    if (piece.codim < 0) throw DomainError("negative |J| in inclusion-exclusion table");
    out += piece.codim % 2 ? -piece.chi_y : piece.chi_y;
  }
  return out;
}

int stratum_gcd(const SncResolution& r, const SncStratum& s) {
  if (s.components.empty()) throw DomainError("stratum with no components");
  int g = 0;
  for (const auto& id : s.components) {
    const auto it = std::find_if(r.components.begin(), r.components.end(),
                                 [&](const SncComponent& c) { return c.id == id; });
    if (it == r.components.end()) throw DomainError("stratum refers to unknown component '" + id + "'");
    g = std::gcd(g, it->multiplicity);
  }
  return g;
}

Integer nu_multiplicity(int stratum_size, int i) { return binomial(stratum_size - 1, i); }

YPoly nearby_stalk_weight(int stratum_size) {
  if (stratum_size < 1) throw DomainError("stratum size must be >= 1");
  // Q(-i) in cohomological degree i is of type (i,i): it contributes
  // (-1)^i (-y)^i = y^i per copy.
  YPoly out;
  for (int i = 0; i < stratum_size; ++i) {
    const Rat sign = i % 2 ? -1 : 1;
    const YPoly neg_y_power = YPoly::monomial(sign, i);
    out += neg_y_power * (sign * Rat(nu_multiplicity(stratum_size, i)));
  }
  return out;
}

namespace {

void validate(const SncResolution& r) {
  std::set<std::string> ids;
  for (const auto& c : r.components) {
    if (c.multiplicity < 1) throw DomainError("component '" + c.id + "' has multiplicity < 1");
    if (!ids.insert(c.id).second) throw DomainError("duplicate component id '" + c.id + "'");
  }
  for (const auto& s : r.strata) {
    const std::set<std::string> unique(s.components.begin(), s.components.end());
    if (unique.size() != s.components.size()) throw DomainError("stratum lists a component twice");
    if (s.cover.empty()) throw DomainError("missing cover genus data for a stratum");
  }
}

std::string stratum_name(const SncStratum& s) {
  std::string out = "E_{";
  for (std::size_t i = 0; i < s.components.size(); ++i) out += (i ? "," : "") + s.components[i];
  return out + "}";
}

}  // namespace

NearbyGenus motivic_nearby_degree0(const SncResolution& r) {
  validate(r);
  NearbyGenus out;
  for (const auto& s : r.strata) {
    const int m_i = stratum_gcd(r, s);
    const YPoly open_cover = incl_excl_open(s.cover);
    const YPoly contribution = open_cover * nearby_stalk_weight(static_cast<int>(s.components.size()));
    out.psi += contribution;
    if (s.over_sigma) out.psi_on_sigma += contribution;
    if (s.base_chi_c) {
      const Rat e_cover = open_cover(Rat(-1));
      const Rat e_base = (*s.base_chi_c)(Rat(-1));
      if (e_cover != Rat(m_i) * e_base) {
        out.notes.push_back(stratum_name(s) + ": cover Euler characteristic " + to_string(e_cover) +
                            " differs from m_I * e(base) = " + std::to_string(m_i) + " * " + to_string(e_base));
      }
    }
  }
  out.phi_on_sigma = out.psi_on_sigma - r.sigma_chi_y + r.sigma_cap_hyperplane_chi_y;
  return out;
}

Rat acampo_euler(const SncResolution& r, bool over_sigma_only) {
  validate(r);
  Rat total = 0;
  for (const auto& s : r.strata) {
    if (s.components.size() != 1 || (over_sigma_only && !s.over_sigma)) continue;
    if (!s.base_chi_c) throw DomainError(stratum_name(s) + " has no base genus for the A'Campo count");
    total += Rat(stratum_gcd(r, s)) * (*s.base_chi_c)(Rat(-1));
  }
  return total;
}

HomologyClass log_dr_trivial(const LogPair& pair) {
  const RingDesc& ring = pair.ring;
  const int n = ring.dimension();
  // [Omega^1_Z(log D)] = [Omega^1_Z] + sum_i ([O] - [O(-D_i)]) and the twist
  // by O(-D) puts every residue eigenvalue at 1.
  KClass dual_log_forms = tangent_kclass(ring);
  GradedClass minus_d(ring);
  for (const auto& a : pair.divisors) {
    if (a.size() != ring.num_factors()) throw DomainError("divisor multidegree has wrong length");
    if (std::any_of(a.begin(), a.end(), [](int d) { return d < 0; }) ||
        std::all_of(a.begin(), a.end(), [](int d) { return d == 0; })) {
      throw DomainError("divisor multidegree must be nonnegative and nonzero");
    }
    dual_log_forms.subtract(BundleDesc::line(ring, a));
    dual_log_forms.add(BundleDesc::trivial(ring, 1));
    minus_d -= GradedClass::linear(ring, a);
  }
  const GradedClass td = multiplicative_class(standard_series(GenusKind::Todd, n), tangent_kclass(ring), ring);
  const GradedClass dr = lambda_y_character(dual_log_forms, ring) * class_exp(minus_d) * td;
  HomologyClass out = normalize_1py(HomologyClass(dr, n));
  out.require_polynomial();
  return out;
}

}  // namespace chiclass
