#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "chiclass/norm_coeff.hpp"

namespace chiclass {

// Cohomology ring Q[h_1..h_m]/(h_i^{n_i+1}) of P^{n_1} x ... x P^{n_m}.
// Monomials are addressed by a dense mixed-radix index.
class RingDesc {
 public:
  explicit RingDesc(std::vector<int> factors);

  std::span<const int> factors() const { return factors_; }
  std::size_t num_factors() const { return factors_.size(); }
  int dimension() const { return dimension_; }
  std::size_t monomial_count() const { return monomial_count_; }

  std::vector<int> exponents(std::size_t index) const;
  // Returns monomial_count() when some exponent exceeds its factor bound.
  std::size_t index(std::span<const int> exponents) const;
  int total_degree(std::size_t index) const;
  std::size_t top_index() const { return monomial_count_ - 1; }

  friend bool operator==(const RingDesc& a, const RingDesc& b) { return a.factors_ == b.factors_; }

 private:
  std::vector<int> factors_;
  int dimension_ = 0;
  std::size_t monomial_count_ = 1;
};

// "P^3", "P^1 x P^1".
std::string to_string(const RingDesc& ring);

// Element of a RingDesc with NormCoeff coefficients. Products silently drop
// monomials above the truncation bound.
class GradedClass {
 public:
  explicit GradedClass(RingDesc ring);

  static GradedClass constant(const RingDesc& ring, const NormCoeff& c);
  // Sum_i a_i h_i.
  static GradedClass linear(const RingDesc& ring, std::span<const int> a);
  static GradedClass generator(const RingDesc& ring, std::size_t i);

  const RingDesc& ring() const { return ring_; }

  const NormCoeff& coeff(std::size_t index) const { return coeffs_.at(index); }
  NormCoeff& coeff(std::size_t index) { return coeffs_.at(index); }
  const NormCoeff& coeff(std::span<const int> exponents) const;
  const NormCoeff& constant_term() const { return coeffs_.front(); }

  // Homogeneous component of the given cohomological degree.
  GradedClass part(int degree) const;
  bool is_zero() const;

  GradedClass& operator+=(const GradedClass& o);
  GradedClass& operator-=(const GradedClass& o);
  GradedClass& operator*=(const NormCoeff& c);

  friend GradedClass operator+(GradedClass a, const GradedClass& b) { return a += b; }
  friend GradedClass operator-(GradedClass a, const GradedClass& b) { return a -= b; }
  friend GradedClass operator*(const GradedClass& a, const GradedClass& b);
  friend GradedClass operator*(GradedClass a, const NormCoeff& c) { return a *= c; }
  friend GradedClass operator*(const NormCoeff& c, GradedClass a) { return a *= c; }
  GradedClass operator-() const { return *this * NormCoeff(-1); }

  friend bool operator==(const GradedClass& a, const GradedClass& b) {
    return a.ring_ == b.ring_ && a.coeffs_ == b.coeffs_;
  }

  GradedClass pow(int e) const;

 private:
  void require_same_ring(const GradedClass& o) const;

  RingDesc ring_;
  std::vector<NormCoeff> coeffs_;
};

// exp(x) for x with zero constant term (x is nilpotent, so this is exact).
GradedClass class_exp(const GradedClass& x);
// log(x) for x with constant term 1.
GradedClass class_log(const GradedClass& x);
// 1/x for x with invertible constant term.
GradedClass class_inverse(const GradedClass& x);

// Monomials in ascending degree: "(1 - y) + (2)h + h^2", "h1*h2".
std::string to_string(const GradedClass& c);
std::string monomial_name(const RingDesc& ring, std::size_t index);

}  // namespace chiclass
