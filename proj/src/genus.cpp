#include "chiclass/genus.hpp"

#include "chiclass/errors.hpp"

namespace chiclass {
namespace {

// (1 - e^{-a})/a = sum_j (-1)^j a^j/(j+1)!
GenusSeries todd_denominator(int order) {
  GenusSeries s(order);
  for (int j = 0; j <= order; ++j) {
    const Rat c(Integer(j % 2 ? -1 : 1), factorial(j + 1));
    s[j] = NormCoeff(c);
  }
  return s;
}

GenusSeries exp_neg(int order) {
  GenusSeries s(order);
  for (int j = 0; j <= order; ++j) s[j] = NormCoeff(Rat(Integer(j % 2 ? -1 : 1), factorial(j)));
  return s;
}

GenusSeries todd_series(int order) { return series_inverse(todd_denominator(order)); }

// a/tanh(a) = (sum a^{2k}/(2k)!) / (sum a^{2k}/(2k+1)!)
GenusSeries l_series(int order) {
  GenusSeries cosh_part(order);
  GenusSeries sinhc_part(order);
  for (int j = 0; j <= order; j += 2) {
    cosh_part[j] = NormCoeff(Rat(Integer(1), factorial(j)));
    sinhc_part[j] = NormCoeff(Rat(Integer(1), factorial(j + 1)));
  }
  return cosh_part * series_inverse(sinhc_part);
}

}  // namespace

std::string_view to_string(GenusKind kind) {
  switch (kind) {
    case GenusKind::Ty: return "Ty";
    case GenusKind::TyTilde: return "TyTilde";
    case GenusKind::Todd: return "Todd";
    case GenusKind::Chern: return "Chern";
    case GenusKind::L: return "L";
  }
  return "?";
}

GenusSeries standard_series(GenusKind kind, int order) {
  if (order < 0) throw DomainError("series order must be >= 0");
  switch (kind) {
    case GenusKind::Todd:
      return todd_series(order);
    case GenusKind::Chern: {
      GenusSeries s(order);
      s[0] = 1;
      if (order >= 1) s[1] = 1;
      return s;
    }
    case GenusKind::L:
      return l_series(order);
    case GenusKind::Ty: {
      GenusSeries s = todd_series(order).scaled_argument(NormCoeff(YPoly::one_plus_y()));
      if (order >= 1) s[1] -= NormCoeff(YPoly::y());
      return s;
    }
    case GenusKind::TyTilde:
      return todd_series(order) * lambda_y_series(order);
  }
  throw DomainError("unknown genus kind");
}

GenusSeries lambda_y_series(int order) {
  GenusSeries s = exp_neg(order) * NormCoeff(YPoly::y());
  s[0] += NormCoeff(1);
  return s;
}

GenusSeries verify_series_relation(int order) {
  const NormCoeff one_plus_y(YPoly::one_plus_y());
  const GenusSeries q = standard_series(GenusKind::Ty, order);
  const GenusSeries qt = standard_series(GenusKind::TyTilde, order).scaled_argument(one_plus_y);
  return q - qt * NormCoeff(YPoly(1), 1);
}

std::vector<GradedClass> power_sums(const BundleDesc& b, int upto) {
  const RingDesc& ring = b.ring();
  std::vector<GradedClass> c;
  c.reserve(static_cast<std::size_t>(upto) + 1);
  for (int i = 0; i <= upto; ++i) {
    c.push_back(i <= b.rank() ? b.chern(i) : GradedClass(ring));
  }
  std::vector<GradedClass> p;
  p.reserve(static_cast<std::size_t>(upto) + 1);
  p.push_back(GradedClass::constant(ring, b.rank()));
  for (int k = 1; k <= upto; ++k) {
    GradedClass pk = c[static_cast<std::size_t>(k)] * NormCoeff(k % 2 ? k : -k);
    for (int i = 1; i < k; ++i) {
      pk += c[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(k - i)] * NormCoeff(i % 2 ? 1 : -1);
    }
    p.push_back(std::move(pk));
  }
  return p;
}

std::vector<GradedClass> power_sums(const KClass& e, int upto) {
  std::vector<GradedClass> total(static_cast<std::size_t>(upto) + 1, GradedClass(e.ring()));
  for (const auto& b : e.plus()) {
    const auto p = power_sums(b, upto);
    for (std::size_t k = 0; k < total.size(); ++k) total[k] += p[k];
  }
  for (const auto& b : e.minus()) {
    const auto p = power_sums(b, upto);
    for (std::size_t k = 0; k < total.size(); ++k) total[k] -= p[k];
  }
  return total;
}

GradedClass multiplicative_class(const GenusSeries& q, const KClass& e, const RingDesc& ring) {
  if (!(e.ring() == ring)) throw DomainError("K-class lives on a different ring");
  const int n = ring.dimension();
  if (q.order() < n) throw DomainError("genus series order below the ring dimension");
  const auto c0_inv = q.constant_term().inverse();
  if (!c0_inv) throw DomainError("genus series constant term " + to_string(q.constant_term()) + " is not a unit");

  const GenusSeries log_unit = series_log(q * *c0_inv, n);
  const auto p = power_sums(e, n);
  GradedClass exponent(ring);
  for (int k = 1; k <= n; ++k) {
    if (!log_unit[k].is_zero()) exponent += p[static_cast<std::size_t>(k)] * log_unit[k];
  }
  return class_exp(exponent) * q.constant_term().pow(e.virtual_rank());
}

GradedClass chern_character(const KClass& e, const RingDesc& ring) {
  if (!(e.ring() == ring)) throw DomainError("K-class lives on a different ring");
  const int n = ring.dimension();
  const auto p = power_sums(e, n);
  GradedClass out = p[0];
  for (int m = 1; m <= n; ++m) out += p[static_cast<std::size_t>(m)] * NormCoeff(Rat(Integer(1), factorial(m)));
  return out;
}

GradedClass lambda_y_character(const KClass& e, const RingDesc& ring) {
  return multiplicative_class(lambda_y_series(ring.dimension()), e, ring);
}

}  // namespace chiclass
