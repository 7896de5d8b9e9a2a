#include "chiclass/classes.hpp"

#include "chiclass/errors.hpp"
#include "chiclass/genus.hpp"

namespace chiclass {

HomologyClass::HomologyClass(GradedClass underlying, int dim_x) : underlying_(std::move(underlying)), dim_x_(dim_x) {
  if (dim_x < 0 || dim_x > ring().dimension()) throw DomainError("dim X out of range for the ambient ring");
  const RingDesc& r = ring();
  for (std::size_t i = 0; i < r.monomial_count(); ++i) {
    if (homology_degree_of(r.total_degree(i)) > dim_x_ && !underlying_.coeff(i).is_zero()) {
      throw DomainError("homology class has a part above dim X");
    }
  }
}

NormCoeff HomologyClass::degree0() const { return degree(underlying_); }

void HomologyClass::require_polynomial() const {
  const RingDesc& r = ring();
  for (std::size_t i = 0; i < r.monomial_count(); ++i) {
    const NormCoeff& c = underlying_.coeff(i);
    if (!c.is_polynomial()) {
      throw NotPolynomial("homology degree " + std::to_string(homology_degree_of(r.total_degree(i))) +
                              " coefficient of " + monomial_name(r, i) + " is not a polynomial in y",
                          to_string(c));
    }
  }
}

HomologyClass normalize_1py(const HomologyClass& c) {
  const RingDesc& r = c.ring();
  GradedClass out(r);
  for (std::size_t i = 0; i < r.monomial_count(); ++i) {
    const int k = c.homology_degree_of(r.total_degree(i));
    out.coeff(i) = c.underlying().coeff(i).scaled_by_one_plus_y(-k);
  }
  return HomologyClass(std::move(out), c.dim_x());
}

HomologyClass hirzebruch_class_smooth(const CompleteIntersection& ci) { return virtual_class_via_Ty(ci); }

HomologyClass virtual_class_via_DR(const CompleteIntersection& ci) {
  const RingDesc& ring = ci.ambient();
  const int n = ring.dimension();
  const KClass tvir = virtual_tangent(ci);
  const GradedClass td = multiplicative_class(standard_series(GenusKind::Todd, n), tvir, ring);
  const GradedClass capped = lambda_y_character(tvir, ring) * td * fundamental_class(ci);
  HomologyClass out = normalize_1py(HomologyClass(capped, ci.dimension()));
  out.require_polynomial();
  return out;
}

HomologyClass virtual_class_via_Ty(const CompleteIntersection& ci) {
  const RingDesc& ring = ci.ambient();
  const GradedClass t =
      multiplicative_class(standard_series(GenusKind::Ty, ring.dimension()), virtual_tangent(ci), ring);
  return HomologyClass(t * fundamental_class(ci), ci.dimension());
}

HomologyClass specialize(const HomologyClass& c, int y0) {
  if (y0 < -1 || y0 > 1) throw DomainError("specialization point must be -1, 0 or 1");
  c.require_polynomial();
  const RingDesc& r = c.ring();
  GradedClass out(r);
  for (std::size_t i = 0; i < r.monomial_count(); ++i) {
    out.coeff(i) = NormCoeff(c.underlying().coeff(i).num()(Rat(y0)));
  }
  return HomologyClass(std::move(out), c.dim_x());
}

YPoly degree_polynomial(const HomologyClass& c) { return clear_denominator(c.degree0()); }

}  // namespace chiclass
