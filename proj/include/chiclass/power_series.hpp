#pragma once

#include <vector>

#include "chiclass/norm_coeff.hpp"

namespace chiclass {

// Truncated power series sum_{j <= order} c_j a^j in one formal variable with
// NormCoeff coefficients. Arithmetic truncates at the smaller order.
class PowerSeries {
 public:
  explicit PowerSeries(int order);
  explicit PowerSeries(std::vector<NormCoeff> coeffs);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }

  const NormCoeff& operator[](int j) const { return coeffs_.at(static_cast<std::size_t>(j)); }
  NormCoeff& operator[](int j) { return coeffs_.at(static_cast<std::size_t>(j)); }
  const NormCoeff& constant_term() const { return coeffs_.front(); }

  bool is_zero() const;

  PowerSeries truncated(int order) const;

  // f(c * a): the j-th coefficient is multiplied by c^j.
  PowerSeries scaled_argument(const NormCoeff& c) const;

  // Coefficientwise substitution y = y0 (coefficients must be finite there).
  PowerSeries specialized(const Rat& y0) const;

  PowerSeries& operator+=(const PowerSeries& o);
  PowerSeries& operator-=(const PowerSeries& o);
  PowerSeries& operator*=(const NormCoeff& c);

  friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
  friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(PowerSeries a, const NormCoeff& c) { return a *= c; }
  friend PowerSeries operator*(const NormCoeff& c, PowerSeries a) { return a *= c; }

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<NormCoeff> coeffs_;
};

// exp(s) to the given order; s must have zero constant term.
PowerSeries series_exp(const PowerSeries& s, int order);

// log(s) to the given order; s must have constant term 1.
PowerSeries series_log(const PowerSeries& s, int order);

// 1/s; the constant term of s must be invertible in NormCoeff.
PowerSeries series_inverse(const PowerSeries& s);

}  // namespace chiclass
