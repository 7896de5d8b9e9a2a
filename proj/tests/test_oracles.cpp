#include <doctest.h>

#include "chiclass/classes.hpp"
#include "chiclass/errors.hpp"
#include "chiclass/oracles.hpp"

using namespace chiclass;

namespace {

YPoly p(std::string_view s) { return parse_ypoly(s); }

CompleteIntersection ci(int n, std::vector<int> degrees) {
  return CompleteIntersection::in_projective_space(n, std::move(degrees));
}

using S = ScissorExpr;

}  // namespace

TEST_CASE("sheaf Euler characteristics of forms") {
  const CompleteIntersection p2 = ci(2, {});
  CHECK(sheaf_euler_omega(p2, 0) == 1);
  CHECK(sheaf_euler_omega(p2, 1) == -1);
  CHECK(sheaf_euler_omega(p2, 2) == 1);
  CHECK(sheaf_euler_omega(ci(3, {4}), 1) == -20);
  CHECK(sheaf_euler_omega(ci(4, {5}), 1) == 100);
  CHECK_THROWS_AS(sheaf_euler_omega(p2, 3), DomainError);
  CHECK_THROWS_AS(chi_y_smooth_oracle(CompleteIntersection(RingDesc({1, 1}), {{1, 1}})), DomainError);
}

TEST_CASE("chi_y from the sheaf oracle") {
  CHECK(chi_y_smooth_oracle(ci(3, {4})) == p("2 - 20y + 2y^2"));
  CHECK(chi_y_smooth_oracle(ci(4, {5})) == p("100y - 100y^2"));
  CHECK(chi_y_smooth_oracle(ci(3, {1})) == p("1 - y + y^2"));
  CHECK(chi_y_smooth_oracle(ci(3, {3})) == p("1 - 7y + y^2"));
  for (int n = 1; n <= 6; ++n) CHECK(chi_y_smooth_oracle(ci(n, {})) == chi_c_projective(n));
  // Canonical curve of genus 4 and the (2,2,2) K3 in P^5.
  CHECK(chi_y_smooth_oracle(ci(3, {2, 3})) == p("-3 + 3y"));
  CHECK(chi_y_smooth_oracle(ci(5, {2, 2, 2})) == p("2 - 20y + 2y^2"));
}

TEST_CASE("Serre symmetry when the canonical class is trivial") {
  for (const CompleteIntersection& x : {ci(3, {4}), ci(4, {5}), ci(4, {2, 3}), ci(2, {3})}) {
    const int d = x.dimension();
    for (int q = 0; q <= d; ++q) {
      CHECK(sheaf_euler_omega(x, q) == (d % 2 ? -1 : 1) * sheaf_euler_omega(x, d - q));
    }
  }
}

TEST_CASE("oracle agrees with the engine on the acceptance family") {
  for (int n = 2; n <= 5; ++n) {
    for (int a = 1; a <= 4; ++a) {
      CHECK(chi_y_smooth_oracle(ci(n, {a})) == degree_polynomial(hirzebruch_class_smooth(ci(n, {a}))));
      for (int b = 1; b <= a && n >= 3; ++b) {
        CHECK(chi_y_smooth_oracle(ci(n, {a, b})) == degree_polynomial(hirzebruch_class_smooth(ci(n, {a, b}))));
      }
    }
  }
}

TEST_CASE("scissor algebra of standard pieces") {
  CHECK(scissor_chi_y(S::affine(1)) == p("-y"));
  CHECK(scissor_chi_y(S::affine(2)) == p("y^2"));
  CHECK(scissor_chi_y(S::complement(S::affine(1), S::point())) == p("-1 - y"));
  CHECK(scissor_chi_y(S::torus()) == p("-1 - y"));
  CHECK(scissor_chi_y(S::product(S::projective(1), S::projective(1))) == p("1 - y").pow(2));
  ScissorExpr cells = S::point();
  CHECK(scissor_chi_y(cells) == chi_c_projective(0));
  for (int n = 1; n <= 6; ++n) {
    cells = S::disjoint_union(cells, S::affine(n));
    CHECK(scissor_chi_y(cells) == degree_polynomial(hirzebruch_class_smooth(ci(n, {}))));
  }
}

TEST_CASE("nodal cubic surface by cut and paste") {
  const ScissorExpr bl6 = S::blowup_points(S::projective(2), 6);
  CHECK(scissor_chi_y(bl6) == p("1 - 7y + y^2"));
  const ScissorExpr nodal = S::contract_curves(bl6, 1);
  CHECK(scissor_chi_y(nodal) == p("1 - 6y + y^2"));
  CHECK(scissor_evaluate(nodal).dim == 2);
  CHECK(scissor_chi_y(nodal)(Rat(-1)) == Rat(8));
}

TEST_CASE("named pieces and errors") {
  ScissorEnv env;
  env.emplace("cubic", S::contract_curves(S::blowup_points(S::projective(2), 6), 1));
  CHECK(scissor_chi_y(S::named("cubic"), env) == p("1 - 6y + y^2"));
  CHECK_THROWS_AS(scissor_chi_y(S::named("missing"), env), DomainError);
  env.emplace("loop", S::named("loop"));
  CHECK_THROWS_AS(scissor_chi_y(S::named("loop"), env), DomainError);
  CHECK_THROWS_AS(scissor_chi_y(S::complement(S::point(), S::affine(1))), DomainError);
  CHECK_THROWS_AS(scissor_chi_y(S::blowup_points(S::point(), 1)), DomainError);
  CHECK_THROWS_AS(S::projective(-1), DomainError);
}
