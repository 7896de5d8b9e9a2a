#pragma once

#include "chiclass/geometry.hpp"

namespace chiclass {

// A Borel-Moore homology class of X, stored as its pushforward to the ambient
// ring. Homology degree k corresponds to ambient cohomological degree
// (ambient dimension - k); this is the only place that conversion lives.
class HomologyClass {
 public:
  HomologyClass(GradedClass underlying, int dim_x);

  const GradedClass& underlying() const { return underlying_; }
  const RingDesc& ring() const { return underlying_.ring(); }
  int dim_x() const { return dim_x_; }

  int ambient_degree_of(int homology_degree) const { return ring().dimension() - homology_degree; }
  int homology_degree_of(int ambient_degree) const { return ring().dimension() - ambient_degree; }

  // The ambient component carrying homology degree k.
  GradedClass homology_part(int k) const { return underlying_.part(ambient_degree_of(k)); }

  // Degree-0 part pushed to a point.
  NormCoeff degree0() const;

  // clear_denominator on every coefficient; throws NotPolynomial.
  void require_polynomial() const;

  friend bool operator==(const HomologyClass& a, const HomologyClass& b) {
    return a.dim_x_ == b.dim_x_ && a.underlying_ == b.underlying_;
  }

 private:
  GradedClass underlying_;
  int dim_x_;
};

// Multiplies the homology-degree-k part by (1+y)^{-k}.
HomologyClass normalize_1py(const HomologyClass& c);

// T_y*(TX) cap [X] for a smooth member of the linear system.
HomologyClass hirzebruch_class_smooth(const CompleteIntersection& ci);

// td_{(1+y)*} of Lambda_y(T*_vir X): normalize_1py(ch(Lambda_y T*_vir) td(T_vir) [X]).
// The result is certified polynomial in y.
HomologyClass virtual_class_via_DR(const CompleteIntersection& ci);

// T_y*(T_vir X) cap [X].
HomologyClass virtual_class_via_Ty(const CompleteIntersection& ci);

// Substitutes y = y0 in {-1, 0, 1}, after certifying polynomiality.
HomologyClass specialize(const HomologyClass& c, int y0);

// Degree-0 part as a polynomial (certified).
YPoly degree_polynomial(const HomologyClass& c);

}  // namespace chiclass
