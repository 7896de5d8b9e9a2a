#include "chiclass/norm_coeff.hpp"

#include "chiclass/errors.hpp"

namespace chiclass {

NormCoeff::NormCoeff(YPoly num, int denom_power) : num_(std::move(num)), denom_power_(denom_power) {
  if (denom_power < 0) {
    num_ *= YPoly::one_plus_y().pow(-denom_power);
    denom_power_ = 0;
  }
  canonicalize();
}

void NormCoeff::canonicalize() {
  if (num_.is_zero()) {
    denom_power_ = 0;
    return;
  }
  while (denom_power_ > 0) {
    auto [q, rem] = num_.divmod_one_plus_y();
    if (rem != 0) break;
    num_ = std::move(q);
    --denom_power_;
  }
}

NormCoeff NormCoeff::scaled_by_one_plus_y(int e) const { return NormCoeff(num_, denom_power_ - e); }

std::optional<NormCoeff> NormCoeff::inverse() const {
  if (num_.is_zero()) return std::nullopt;
  YPoly rest = num_;
  int j = 0;
  while (!rest.is_constant()) {
    auto [q, rem] = rest.divmod_one_plus_y();
    if (rem != 0) return std::nullopt;
    rest = std::move(q);
    ++j;
  }
  const Rat c = rest.coeff(0);
  return NormCoeff(YPoly(Rat(1) / c), j - denom_power_);
}

NormCoeff NormCoeff::pow(int e) const {
  NormCoeff base = *this;
  if (e < 0) {
    auto inv = inverse();
    if (!inv) throw DomainError("negative power of a non-invertible coefficient " + to_string(*this));
    base = *inv;
    e = -e;
  }
  return NormCoeff(base.num_.pow(e), base.denom_power_ * e);
}

Rat NormCoeff::evaluate(const Rat& y0) const {
  if (denom_power_ == 0) return num_(y0);
  const Rat base = 1 + y0;
  if (base == 0) throw DomainError("evaluating " + to_string(*this) + " at its pole y = -1");
  Rat den = 1;
  for (int i = 0; i < denom_power_; ++i) den *= base;
  return num_(y0) / den;
}

NormCoeff& NormCoeff::operator+=(const NormCoeff& o) {
  const int k = std::max(denom_power_, o.denom_power_);
  YPoly lhs = num_ * YPoly::one_plus_y().pow(k - denom_power_);
  lhs += o.num_ * YPoly::one_plus_y().pow(k - o.denom_power_);
  num_ = std::move(lhs);
  denom_power_ = k;
  canonicalize();
  return *this;
}

NormCoeff& NormCoeff::operator-=(const NormCoeff& o) { return *this += -o; }

NormCoeff& NormCoeff::operator*=(const NormCoeff& o) {
  num_ *= o.num_;
  denom_power_ += o.denom_power_;
  canonicalize();
  return *this;
}

NormCoeff& NormCoeff::operator*=(const Rat& c) {
  num_ *= c;
  if (num_.is_zero()) denom_power_ = 0;
  return *this;
}

YPoly clear_denominator(const NormCoeff& c) {
  if (!c.is_polynomial()) {
    throw NotPolynomial("coefficient is not a polynomial in y", to_string(c));
  }
  return c.num();
}

std::string to_string(const NormCoeff& c) {
  if (c.is_polynomial()) return to_string(c.num());
  std::string den = "(1+y)";
  if (c.denom_power() > 1) den += "^" + std::to_string(c.denom_power());
  return "(" + to_string(c.num()) + ")/" + den;
}

}  // namespace chiclass
