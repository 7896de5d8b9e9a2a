#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "chiclass/geometry.hpp"
#include "chiclass/ypoly.hpp"

namespace chiclass {

// Weights of a weighted-homogeneous f: f(l^{w_1} x_1, ...) = l f(x).
class Weights {
 public:
  explicit Weights(std::vector<Rat> w);

  std::span<const Rat> values() const { return w_; }
  int num_variables() const { return static_cast<int>(w_.size()); }

 private:
  std::vector<Rat> w_;
};

// Steenbrink spectrum with the monodromy forgotten: a multiset in (0, n),
// symmetric under a -> n - a. Entries are kept sorted.
class SpectrumData {
 public:
  SpectrumData(std::vector<Rat> entries, int num_variables);

  std::span<const Rat> entries() const { return entries_; }
  int num_variables() const { return n_; }

  friend bool operator==(const SpectrumData& a, const SpectrumData& b) {
    return a.n_ == b.n_ && a.entries_ == b.entries_;
  }

 private:
  std::vector<Rat> entries_;
  int n_;
};

// "{1/3, 2/3}"
std::string to_string(const SpectrumData& s);

struct IsolatedSingularPoint {
  std::string label;
  std::variant<Weights, SpectrumData> data;

  SpectrumData spectrum() const;
};

// Expands prod_i (t^{w_i} - t)/(1 - t^{w_i}) into sum t^a. Throws DomainError
// if the weights do not describe an isolated singularity (the quotient is not
// a polynomial in rational powers of t with nonnegative coefficients).
SpectrumData spectrum_wh(const Weights& w);

long milnor_number(const SpectrumData& s);

// prod (1/w_i - 1); throws DomainError when it is not an integer.
long milnor_number(const Weights& w);

// Hodge level p(a) = floor(n - a) of a spectral number.
int hodge_level(const Rat& alpha, int n);

// chi_y of the reduced Milnor cohomology: (-1)^{n-1} sum_a (-y)^{p(a)}.
YPoly chi_y_milnor_fiber(const SpectrumData& s);

// Point-supported Hirzebruch-Milnor class of X with isolated singularities:
// the sum of chi_y_milnor_fiber over the points. Each spectrum must live in
// dim X + 1 variables.
YPoly milnor_class_isolated(const CompleteIntersection& ci, std::span<const IsolatedSingularPoint> sings);

// deg T^vir_y(X) - chi_y(X) - M_y(X); zero when the data are consistent.
YPoly verify_cor2_degree0(const CompleteIntersection& ci, std::span<const IsolatedSingularPoint> sings,
                          const YPoly& chi_y_of_x);

struct RecursionResult {
  YPoly total;
  std::vector<std::string> warnings;
};

// Genus-level inductive formula: sum of the per-level vanishing-cycle terms.
RecursionResult hm_recursion_degree0(std::span<const YPoly> levels);

}  // namespace chiclass
