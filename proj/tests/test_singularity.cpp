#include <doctest.h>

#include <algorithm>

#include "chiclass/classes.hpp"
#include "chiclass/errors.hpp"
#include "chiclass/singularity.hpp"

using namespace chiclass;

namespace {

YPoly p(std::string_view s) { return parse_ypoly(s); }

Weights weights(std::initializer_list<Rat> w) { return Weights(std::vector<Rat>(w)); }

std::vector<Rat> entries(const SpectrumData& s) { return {s.entries().begin(), s.entries().end()}; }

std::vector<Rat> sorted(std::vector<Rat> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Brieskorn-Pham x_1^{a_1} + ... + x_n^{a_n}: sum_i k_i / a_i over 1 <= k_i < a_i.
std::vector<Rat> brieskorn_pham_oracle(const std::vector<int>& a) {
  std::vector<Rat> out{Rat(0)};
  for (int ai : a) {
    std::vector<Rat> next;
    for (const Rat& s : out) {
      for (int k = 1; k < ai; ++k) next.push_back(s + Rat(k) / ai);
    }
    out = std::move(next);
  }
  return sorted(out);
}

// D_k: x^2 y + y^{k-1}. Milnor algebra basis 1, y, ..., y^{k-2}, x; the
// spectral number of x^a y^b is (a+1) w_x + (b+1) w_y.
std::vector<Rat> dk_oracle(int k) {
  const Rat wy(1, k - 1);
  const Rat wx = (1 - wy) / 2;
  std::vector<Rat> out;
  for (int b = 0; b <= k - 2; ++b) out.push_back(wx + (b + 1) * wy);
  out.push_back(2 * wx + wy);
  return sorted(out);
}

Weights dk_weights(int k) {
  const Rat wy(1, k - 1);
  return weights({(1 - wy) / 2, wy});
}

IsolatedSingularPoint node(std::string label) {
  return {std::move(label), weights({Rat(1, 2), Rat(1, 2), Rat(1, 2)})};
}

void check_spectrum_invariants(const Weights& w) {
  const SpectrumData s = spectrum_wh(w);
  const int n = s.num_variables();
  std::vector<Rat> mirrored;
  for (const Rat& a : s.entries()) mirrored.push_back(Rat(n) - a);
  CHECK(sorted(mirrored) == entries(s));
  CHECK(milnor_number(s) == milnor_number(w));
  const Rat sign = n % 2 ? 1 : -1;
  CHECK(chi_y_milnor_fiber(s)(Rat(-1)) == sign * milnor_number(s));
}

}  // namespace

TEST_CASE("spectrum examples") {
  const SpectrumData a1 = spectrum_wh(weights({Rat(1, 2), Rat(1, 2), Rat(1, 2)}));
  CHECK(entries(a1) == std::vector<Rat>{Rat(3, 2)});
  CHECK(to_string(a1) == "{3/2}");
  CHECK(milnor_number(a1) == 1);

  const SpectrumData a2 = spectrum_wh(weights({Rat(1, 3)}));
  CHECK(entries(a2) == std::vector<Rat>{Rat(1, 3), Rat(2, 3)});
  CHECK(milnor_number(a2) == 2);

  const SpectrumData e8 = spectrum_wh(weights({Rat(1, 3), Rat(1, 5)}));
  CHECK(e8.entries().size() == 8);
  CHECK(milnor_number(weights({Rat(1, 3), Rat(1, 5)})) == 8);
}

TEST_CASE("chi_y of the reduced Milnor cohomology") {
  CHECK(chi_y_milnor_fiber(spectrum_wh(weights({Rat(1, 2), Rat(1, 2), Rat(1, 2)}))) == p("-y"));
  CHECK(chi_y_milnor_fiber(spectrum_wh(weights({Rat(1, 3)}))) == YPoly(2));
  // xy: the integral spectral number 1 sits at Hodge level n - 1 = 1.
  const SpectrumData xy = spectrum_wh(weights({Rat(1, 2), Rat(1, 2)}));
  CHECK(entries(xy) == std::vector<Rat>{Rat(1)});
  CHECK(chi_y_milnor_fiber(xy) == p("y"));
  CHECK(hodge_level(Rat(1), 2) == 1);
  CHECK(hodge_level(Rat(5, 6), 2) == 1);
  CHECK(hodge_level(Rat(7, 6), 2) == 0);
}

TEST_CASE("Brieskorn-Pham spectra match the tuple enumeration") {
  const std::vector<std::vector<int>> exponents{{2}, {5}, {2, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 4},
                                                {2, 2, 2}, {2, 3, 4}, {3, 3, 3}, {2, 2, 5, 3}};
  for (const auto& a : exponents) {
    std::vector<Rat> w;
    for (int ai : a) w.emplace_back(1, ai);
    CHECK(entries(spectrum_wh(Weights(w))) == brieskorn_pham_oracle(a));
  }
}

TEST_CASE("D_k spectra match the Milnor algebra basis") {
  for (int k = 4; k <= 20; ++k) {
    CAPTURE(k);
    CHECK(entries(spectrum_wh(dk_weights(k))) == dk_oracle(k));
  }
}

TEST_CASE("A-D-E weight systems up to mu = 20") {
  for (int k = 1; k <= 20; ++k) {
    const Weights ak = weights({Rat(1, k + 1)});
    CHECK(milnor_number(spectrum_wh(ak)) == k);
    check_spectrum_invariants(ak);
    check_spectrum_invariants(weights({Rat(1, k + 1), Rat(1, 2), Rat(1, 2)}));
  }
  for (int k = 4; k <= 20; ++k) {
    CHECK(milnor_number(spectrum_wh(dk_weights(k))) == k);
    check_spectrum_invariants(dk_weights(k));
  }
  const Weights e6 = weights({Rat(1, 3), Rat(1, 4)});
  const Weights e7 = weights({Rat(1, 3), Rat(2, 9)});
  const Weights e8 = weights({Rat(1, 3), Rat(1, 5)});
  CHECK(milnor_number(spectrum_wh(e6)) == 6);
  CHECK(milnor_number(spectrum_wh(e7)) == 7);
  CHECK(milnor_number(spectrum_wh(e8)) == 8);
  for (const Weights& w : {e6, e7, e8}) check_spectrum_invariants(w);
}

TEST_CASE("suspension shifts the spectrum by one half") {
  const std::vector<Weights> bases{weights({Rat(1, 3)}), weights({Rat(1, 3), Rat(1, 5)}), dk_weights(6),
                                   weights({Rat(1, 4), Rat(1, 4)})};
  for (const Weights& w : bases) {
    std::vector<Rat> extended(w.values().begin(), w.values().end());
    extended.emplace_back(1, 2);
    std::vector<Rat> shifted;
    const SpectrumData base = spectrum_wh(w);
    for (const Rat& a : base.entries()) shifted.push_back(a + Rat(1, 2));
    CHECK(entries(spectrum_wh(Weights(extended))) == shifted);

    // Two squares raise every Hodge level by one.
    extended.emplace_back(1, 2);
    CHECK(chi_y_milnor_fiber(spectrum_wh(Weights(extended))) == -YPoly::y() * chi_y_milnor_fiber(spectrum_wh(w)));
  }
}

TEST_CASE("invalid weights and spectra") {
  CHECK_THROWS_AS(weights({Rat(0)}), DomainError);
  CHECK_THROWS_AS(weights({Rat(1)}), DomainError);
  CHECK_THROWS_AS(Weights({}), DomainError);
  CHECK_THROWS_AS(spectrum_wh(weights({Rat(2, 5), Rat(2, 5)})), DomainError);
  CHECK_THROWS_AS(milnor_number(weights({Rat(2, 5), Rat(2, 5)})), DomainError);
  CHECK_THROWS_AS(SpectrumData({Rat(1, 3)}, 1), DomainError);
  CHECK_THROWS_AS(SpectrumData({Rat(0), Rat(1)}, 1), DomainError);
  CHECK_NOTHROW(SpectrumData({Rat(2, 3), Rat(1, 3)}, 1));
}

TEST_CASE("point-supported Milnor classes") {
  const CompleteIntersection cubic = CompleteIntersection::in_projective_space(3, {3});
  CHECK(milnor_class_isolated(cubic, {}).is_zero());
  const std::vector<IsolatedSingularPoint> one{node("p")};
  CHECK(milnor_class_isolated(cubic, one) == p("-y"));
  const std::vector<IsolatedSingularPoint> three{node("p"), node("q"), node("r")};
  CHECK(milnor_class_isolated(cubic, three) == p("-3y"));

  const std::vector<IsolatedSingularPoint> a{node("p"), {"a2", weights({Rat(1, 3), Rat(1, 2), Rat(1, 2)})}};
  const std::vector<IsolatedSingularPoint> b{{"e6", weights({Rat(1, 3), Rat(1, 4), Rat(1, 2)})}};
  std::vector<IsolatedSingularPoint> both = a;
  both.insert(both.end(), b.begin(), b.end());
  CHECK(milnor_class_isolated(cubic, both) == milnor_class_isolated(cubic, a) + milnor_class_isolated(cubic, b));

  const std::vector<IsolatedSingularPoint> wrong{{"curve", weights({Rat(1, 2), Rat(1, 2)})}};
  CHECK_THROWS_AS(milnor_class_isolated(cubic, wrong), DomainError);
}

TEST_CASE("degree-0 consistency checks") {
  const CompleteIntersection cubic = CompleteIntersection::in_projective_space(3, {3});
  const std::vector<IsolatedSingularPoint> one{node("p")};
  const YPoly residual = verify_cor2_degree0(cubic, one, p("1 - 6y + y^2"));
  CHECK(residual.is_zero());
  CHECK(degree_polynomial(virtual_class_via_Ty(cubic))(Rat(-1)) - Rat(8) - Rat(1) == 0);

  const CompleteIntersection k3 = CompleteIntersection::in_projective_space(3, {4});
  CHECK(verify_cor2_degree0(k3, {}, p("2 - 20y + 2y^2")).is_zero());
  CHECK_FALSE(verify_cor2_degree0(k3, one, p("2 - 20y + 2y^2")).is_zero());
}

TEST_CASE("genus-level recursion") {
  const RecursionResult empty = hm_recursion_degree0({});
  CHECK(empty.total.is_zero());
  CHECK(empty.warnings.size() == 1);
  const std::vector<YPoly> single{p("-y")};
  CHECK(hm_recursion_degree0(single).total == p("-y"));
  CHECK(hm_recursion_degree0(single).warnings.empty());
  const std::vector<YPoly> two{p("1 - y"), p("y^2 + 3")};
  CHECK(hm_recursion_degree0(two).total == p("4 - y + y^2"));
}
