#pragma once

#include <string_view>
#include <vector>

#include "chiclass/geometry.hpp"
#include "chiclass/power_series.hpp"

namespace chiclass {

using GenusSeries = PowerSeries;

enum class GenusKind {
  Ty,       // Q_y(a) = a(1+y)/(1 - e^{-a(1+y)}) - a y
  TyTilde,  // a(1 + y e^{-a})/(1 - e^{-a})
  Todd,     // a/(1 - e^{-a})
  Chern,    // 1 + a
  L,        // a/tanh(a)
};

std::string_view to_string(GenusKind kind);

GenusSeries standard_series(GenusKind kind, int order);

// Q_y(a) - (1+y)^{-1} Q~_y(a(1+y)); identically zero.
GenusSeries verify_series_relation(int order);

// 1 + y e^{-a}: ch of Lambda_y of the dual of a line bundle with c_1 = a.
GenusSeries lambda_y_series(int order);

// p_1..p_upto (index 0 is the rank) of the Chern roots of b, via Newton's
// identities p_k = sum_{i<k} (-1)^{i-1} c_i p_{k-i} + (-1)^{k-1} k c_k.
std::vector<GradedClass> power_sums(const BundleDesc& b, int upto);

// Power sums of a virtual bundle: plus parts minus minus parts.
std::vector<GradedClass> power_sums(const KClass& e, int upto);

// prod Q(a_i) / prod Q(b_j) over the formal Chern roots of the plus and minus
// parts of e. A non-1 constant term c contributes c^{virtual rank}.
GradedClass multiplicative_class(const GenusSeries& q, const KClass& e, const RingDesc& ring);

GradedClass chern_character(const KClass& e, const RingDesc& ring);

// ch(Lambda_y E^*).
GradedClass lambda_y_character(const KClass& e, const RingDesc& ring);

}  // namespace chiclass
