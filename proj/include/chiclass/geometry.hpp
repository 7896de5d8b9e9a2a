#pragma once

#include <string>
#include <vector>

#include "chiclass/graded_ring.hpp"

namespace chiclass {

// A vector bundle known through its rank and total Chern class.
class BundleDesc {
 public:
  BundleDesc(int rank, GradedClass total_chern);

  static BundleDesc trivial(const RingDesc& ring, int rank);
  // O(a_1 h_1 + ... + a_m h_m).
  static BundleDesc line(const RingDesc& ring, std::span<const int> multidegree);

  int rank() const { return rank_; }
  const GradedClass& total_chern() const { return total_chern_; }
  const RingDesc& ring() const { return total_chern_.ring(); }
  // c_i, the degree-i part of the total Chern class.
  GradedClass chern(int i) const { return total_chern_.part(i); }

 private:
  int rank_;
  GradedClass total_chern_;
};

// Formal difference sum(plus) - sum(minus) in K^0.
class KClass {
 public:
  explicit KClass(RingDesc ring) : ring_(std::move(ring)) {}
  KClass(RingDesc ring, std::vector<BundleDesc> plus, std::vector<BundleDesc> minus);

  const RingDesc& ring() const { return ring_; }
  const std::vector<BundleDesc>& plus() const { return plus_; }
  const std::vector<BundleDesc>& minus() const { return minus_; }

  int virtual_rank() const;
  GradedClass total_chern() const;

  KClass& operator+=(const KClass& o);
  KClass& operator-=(const KClass& o);
  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }

  KClass& add(BundleDesc b);
  KClass& subtract(BundleDesc b);

 private:
  RingDesc ring_;
  std::vector<BundleDesc> plus_;
  std::vector<BundleDesc> minus_;
};

// X cut out in the ambient product of projective spaces by r sections of
// O(a_j), one multidegree vector a_j per section. Nothing is assumed about
// the order of the a_j.
class CompleteIntersection {
 public:
  CompleteIntersection(RingDesc ambient, std::vector<std::vector<int>> multidegrees);

  // Hypersurface sections of P^n with the given degrees.
  static CompleteIntersection in_projective_space(int n, std::vector<int> degrees);

  const RingDesc& ambient() const { return ambient_; }
  const std::vector<std::vector<int>>& multidegrees() const { return multidegrees_; }
  int codimension() const { return static_cast<int>(multidegrees_.size()); }
  int dimension() const { return ambient_.dimension() - codimension(); }

 private:
  RingDesc ambient_;
  std::vector<std::vector<int>> multidegrees_;
};

std::string to_string(const CompleteIntersection& ci);

RingDesc projective_ring(std::vector<int> factors);

// Euler sequences: sum_i (n_i + 1) O(h_i) - m O.
KClass tangent_kclass(const RingDesc& ring);

// [TY|_X] - [N_{X/Y}], written through ambient pullbacks.
KClass virtual_tangent(const CompleteIntersection& ci);

// prod_j (a_j . h): the ambient class dual to [X].
GradedClass fundamental_class(const CompleteIntersection& ci);

// Coefficient of the top monomial h_1^{n_1} ... h_m^{n_m}.
NormCoeff degree(const GradedClass& c);

}  // namespace chiclass
