#include <doctest.h>

#include "chiclass/classes.hpp"
#include "chiclass/errors.hpp"
#include "chiclass/nearby.hpp"
#include "chiclass/oracles.hpp"
#include "chiclass/singularity.hpp"

using namespace chiclass;

namespace {

YPoly p(std::string_view s) { return parse_ypoly(s); }

// Node x^2 + y^2 + z^2 after one blow-up: strict transform E1 (m = 1) and
// exceptional E2 = P^2 (m = 2) meeting along a conic. The double cover of
// E2 minus the conic compactifies to P^1 x P^1 with the diagonal as boundary.
SncResolution node_resolution() {
  SncResolution r;
  r.components = {{"E1", 1}, {"E2", 2}};
  r.strata = {
      {{"E2"}, true, {{0, p("1 - y").pow(2)}, {1, p("1 - y")}}, p("y^2")},
      {{"E1", "E2"}, true, {{0, p("1 - y")}}, std::nullopt},
  };
  r.sigma_chi_y = YPoly(1);
  r.sigma_cap_hyperplane_chi_y = YPoly();
  return r;
}

// General-position hypersurfaces of the given degrees in P^n: the closed
// stratum of a set J of components is a complete intersection of those degrees.
std::vector<CoverPiece> arrangement_table(int n, const std::vector<int>& degrees) {
  std::vector<CoverPiece> table;
  const std::size_t k = degrees.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    std::vector<int> sub;
    for (std::size_t i = 0; i < k; ++i) {
      if (mask & (std::size_t{1} << i)) sub.push_back(degrees[i]);
    }
    const int codim = static_cast<int>(sub.size());
    if (codim > n) continue;
    YPoly chi;
    if (codim == n) {
      long points = 1;
      for (int d : sub) points *= d;
      chi = YPoly(points);
    } else {
      chi = chi_y_smooth_oracle(CompleteIntersection::in_projective_space(n, sub));
    }
    table.push_back({codim, chi});
  }
  return table;
}

}  // namespace

TEST_CASE("additivity over strata") {
  const std::vector<StratumGenus> cells{{"A2", p("y^2"), YPoly(1)}, {"A1", p("-y"), YPoly(1)}, {"pt", YPoly(1), YPoly(1)}};
  CHECK(strat_additivity(cells) == p("1 - y + y^2"));
  // Refine A^2 into (A^2 minus a line) and the line.
  const std::vector<StratumGenus> refined{{"A2-A1", p("y^2 + y"), YPoly(1)},
                                          {"A1'", p("-y"), YPoly(1)},
                                          {"A1", p("-y"), YPoly(1)},
                                          {"pt", YPoly(1), YPoly(1)}};
  CHECK(strat_additivity(refined) == strat_additivity(cells));
  const std::vector<StratumGenus> vanishing{{"S", p("1 - y"), YPoly()}};
  CHECK(strat_additivity(vanishing).is_zero());
  const std::vector<StratumGenus> two{{"S1", YPoly(1), p("-y")}, {"S2", YPoly(2), p("-y")}};
  CHECK(strat_additivity(two) == p("-3y"));
}

TEST_CASE("inclusion-exclusion over the boundary") {
  const std::vector<CoverPiece> p1_minus_point{{0, p("1 - y")}, {1, YPoly(1)}};
  CHECK(incl_excl_open(p1_minus_point) == p("-y"));
  const std::vector<CoverPiece> p2_minus_lines{{0, p("1 - y + y^2")}, {1, p("1 - y")}, {1, p("1 - y")}, {2, YPoly(1)}};
  CHECK(incl_excl_open(p2_minus_lines) == p("y + y^2"));
  const std::vector<CoverPiece> nothing_removed{{0, p("1 - y + y^2")}};
  CHECK(incl_excl_open(nothing_removed) == p("1 - y + y^2"));
  const std::vector<CoverPiece> no_closure{{1, YPoly(1)}};
  CHECK_THROWS_AS(incl_excl_open(no_closure), DomainError);
}

TEST_CASE("nearby stalk weights resum binomially") {
  CHECK(nu_multiplicity(3, 1) == 2);
  CHECK(nu_multiplicity(1, 0) == 1);
  CHECK(nu_multiplicity(2, 2) == 0);
  for (int k = 1; k <= 12; ++k) {
    YPoly sum;
    for (int i = 0; i < k; ++i) sum += YPoly::monomial(Rat(binomial(k - 1, i)), i);
    CHECK(sum == YPoly::one_plus_y().pow(k - 1));
    CHECK(nearby_stalk_weight(k) == YPoly::one_plus_y().pow(k - 1));
  }
}

TEST_CASE("motivic nearby fiber of the node") {
  const SncResolution r = node_resolution();
  const NearbyGenus g = motivic_nearby_degree0(r);
  CHECK(g.psi_on_sigma == p("1 - y"));
  CHECK(g.phi_on_sigma == p("-y"));
  CHECK(g.notes.empty());
  const SpectrumData s = spectrum_wh(Weights({Rat(1, 2), Rat(1, 2), Rat(1, 2)}));
  CHECK(g.phi_on_sigma == chi_y_milnor_fiber(s));
  // A'Campo: e(F) = 1 + mu = 2 = m_2 e(E2 minus conic).
  CHECK(acampo_euler(r, true) == Rat(2));
  CHECK(g.psi_on_sigma(Rat(-1)) == acampo_euler(r, true));
  CHECK(stratum_gcd(r, r.strata[1]) == 1);
  CHECK(stratum_gcd(r, r.strata[0]) == 2);
}

TEST_CASE("smooth fiber has no vanishing cycles") {
  SncResolution r;
  r.components = {{"F", 1}};
  r.strata = {{{"F"}, false, {{0, p("1 - y + y^2")}}, p("1 - y + y^2")}};
  const NearbyGenus g = motivic_nearby_degree0(r);
  CHECK(g.psi == p("1 - y + y^2"));
  CHECK(g.psi_on_sigma.is_zero());
  CHECK(g.phi_on_sigma.is_zero());
  CHECK(acampo_euler(r, false) == Rat(3));
}

TEST_CASE("inconsistent cover data is reported") {
  SncResolution r = node_resolution();
  r.strata[0].base_chi_c = p("1 - y + y^2");
  CHECK(motivic_nearby_degree0(r).notes.size() == 1);
  SncResolution bad = node_resolution();
  bad.strata[1].components = {"E1", "E9"};
  CHECK_THROWS_AS(motivic_nearby_degree0(bad), DomainError);
}

TEST_CASE("log de Rham route examples") {
  CHECK(degree_polynomial(log_dr_trivial({RingDesc({1}), {{1}}})) == p("-y"));
  CHECK(degree_polynomial(log_dr_trivial({RingDesc({2}), {{1}, {1}}})) == p("y + y^2"));
  for (int n = 1; n <= 4; ++n) {
    const RingDesc ring({n});
    CHECK(log_dr_trivial({ring, {}}) == hirzebruch_class_smooth(CompleteIntersection(ring, {})));
  }
}

TEST_CASE("log de Rham route agrees with inclusion-exclusion on arrangements") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 1; k <= 3; ++k) {
      for (int top = 1; top <= 2; ++top) {
        std::vector<int> degrees(static_cast<std::size_t>(k), 1);
        degrees.back() = top;
        std::vector<std::vector<int>> divisors;
        for (int d : degrees) divisors.push_back({d});
        CAPTURE(n);
        CAPTURE(k);
        CAPTURE(top);
        CHECK(degree_polynomial(log_dr_trivial({RingDesc({n}), divisors})) ==
              incl_excl_open(arrangement_table(n, degrees)));
      }
    }
  }
}

TEST_CASE("log de Rham route on P^1 x P^1") {
  // Complement of the two rulings through a point: A^1 x A^1.
  const RingDesc q({1, 1});
  CHECK(degree_polynomial(log_dr_trivial({q, {{1, 0}, {0, 1}}})) == p("y^2"));
  // Complement of two fibres of each ruling: C^* x C^*.
  CHECK(degree_polynomial(log_dr_trivial({q, {{1, 0}, {1, 0}, {0, 1}, {0, 1}}})) == p("1 + y").pow(2));
}
