#include "chiclass/geometry.hpp"

#include "chiclass/errors.hpp"

namespace chiclass {

BundleDesc::BundleDesc(int rank, GradedClass total_chern) : rank_(rank), total_chern_(std::move(total_chern)) {
  if (rank < 0) throw DomainError("bundle rank must be >= 0");
  if (total_chern_.constant_term() != NormCoeff(1)) throw DomainError("total Chern class must start with 1");
  const RingDesc& ring = total_chern_.ring();
  for (std::size_t i = 0; i < ring.monomial_count(); ++i) {
    if (ring.total_degree(i) > rank && !total_chern_.coeff(i).is_zero()) {
      throw DomainError("Chern class above the rank of the bundle");
    }
  }
}

BundleDesc BundleDesc::trivial(const RingDesc& ring, int rank) {
  return BundleDesc(rank, GradedClass::constant(ring, 1));
}

BundleDesc BundleDesc::line(const RingDesc& ring, std::span<const int> multidegree) {
  return BundleDesc(1, GradedClass::constant(ring, 1) + GradedClass::linear(ring, multidegree));
}

KClass::KClass(RingDesc ring, std::vector<BundleDesc> plus, std::vector<BundleDesc> minus)
    : ring_(std::move(ring)) {
  for (auto& b : plus) add(std::move(b));
  for (auto& b : minus) subtract(std::move(b));
}

int KClass::virtual_rank() const {
  int r = 0;
  for (const auto& b : plus_) r += b.rank();
  for (const auto& b : minus_) r -= b.rank();
  return r;
}

GradedClass KClass::total_chern() const {
  GradedClass num = GradedClass::constant(ring_, 1);
  for (const auto& b : plus_) num = num * b.total_chern();
  GradedClass den = GradedClass::constant(ring_, 1);
  for (const auto& b : minus_) den = den * b.total_chern();
  return num * class_inverse(den);
}

KClass& KClass::add(BundleDesc b) {
  if (!(b.ring() == ring_)) throw DomainError("bundle lives on a different ring");
  plus_.push_back(std::move(b));
  return *this;
}

KClass& KClass::subtract(BundleDesc b) {
  if (!(b.ring() == ring_)) throw DomainError("bundle lives on a different ring");
  minus_.push_back(std::move(b));
  return *this;
}

KClass& KClass::operator+=(const KClass& o) {
  for (const auto& b : o.plus_) add(b);
  for (const auto& b : o.minus_) subtract(b);
  return *this;
}

KClass& KClass::operator-=(const KClass& o) {
  for (const auto& b : o.plus_) subtract(b);
  for (const auto& b : o.minus_) add(b);
  return *this;
}

CompleteIntersection::CompleteIntersection(RingDesc ambient, std::vector<std::vector<int>> multidegrees)
    : ambient_(std::move(ambient)), multidegrees_(std::move(multidegrees)) {
  if (codimension() >= ambient_.dimension()) {
    throw DomainError("complete intersection needs 0 <= r < ambient dimension");
  }
  for (const auto& a : multidegrees_) {
    if (a.size() != ambient_.num_factors()) throw DomainError("multidegree length differs from factor count");
    for (int d : a) {
      if (d < 1) throw DomainError("multidegree entries must be positive");
    }
  }
}

CompleteIntersection CompleteIntersection::in_projective_space(int n, std::vector<int> degrees) {
  std::vector<std::vector<int>> md;
  md.reserve(degrees.size());
  for (int d : degrees) md.push_back({d});
  return CompleteIntersection(RingDesc({n}), std::move(md));
}

std::string to_string(const CompleteIntersection& ci) {
  std::string out = "(";
  for (std::size_t j = 0; j < ci.multidegrees().size(); ++j) {
    if (j) out += ",";
    const auto& a = ci.multidegrees()[j];
    if (a.size() == 1) {
      out += std::to_string(a[0]);
    } else {
      out += "[";
      for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + std::to_string(a[i]);
      out += "]";
    }
  }
  return out + ") in " + to_string(ci.ambient());
}

RingDesc projective_ring(std::vector<int> factors) { return RingDesc(std::move(factors)); }

KClass tangent_kclass(const RingDesc& ring) {
  KClass out(ring);
  for (std::size_t i = 0; i < ring.num_factors(); ++i) {
    std::vector<int> a(ring.num_factors(), 0);
    a[i] = 1;
    for (int k = 0; k <= ring.factors()[i]; ++k) out.add(BundleDesc::line(ring, a));
    out.subtract(BundleDesc::trivial(ring, 1));
  }
  return out;
}

KClass virtual_tangent(const CompleteIntersection& ci) {
  KClass out = tangent_kclass(ci.ambient());
  for (const auto& a : ci.multidegrees()) out.subtract(BundleDesc::line(ci.ambient(), a));
  return out;
}

GradedClass fundamental_class(const CompleteIntersection& ci) {
  GradedClass out = GradedClass::constant(ci.ambient(), 1);
  for (const auto& a : ci.multidegrees()) out = out * GradedClass::linear(ci.ambient(), a);
  return out;
}

NormCoeff degree(const GradedClass& c) { return c.coeff(c.ring().top_index()); }

}  // namespace chiclass
