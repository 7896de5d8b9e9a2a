#pragma once

#include <optional>
#include <string>

#include "chiclass/ypoly.hpp"

namespace chiclass {

// num / (1+y)^k with k >= 0, kept in canonical form: k == 0, or (1+y) does
// not divide num. The zero value always has k == 0. Because the form is
// canonical, structural equality is value equality.
class NormCoeff {
 public:
  NormCoeff() = default;
  NormCoeff(const Rat& c) : num_(c) {}     // NOLINT(google-explicit-constructor)
  NormCoeff(long c) : num_(Rat(c)) {}      // NOLINT(google-explicit-constructor)
  NormCoeff(YPoly num) : num_(std::move(num)) {}  // NOLINT(google-explicit-constructor)
  NormCoeff(YPoly num, int denom_power);

  const YPoly& num() const { return num_; }
  int denom_power() const { return denom_power_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return denom_power_ == 0; }

  // Multiplies by (1+y)^e for any integer e.
  NormCoeff scaled_by_one_plus_y(int e) const;

  // Inverse exists iff num = c * (1+y)^j with c a nonzero rational.
  std::optional<NormCoeff> inverse() const;

  // Power with signed exponent; throws DomainError if a negative power of a
  // non-invertible value is requested.
  NormCoeff pow(int e) const;

  // Value at y = y0. Throws DomainError at y0 = -1 unless is_polynomial().
  Rat evaluate(const Rat& y0) const;

  NormCoeff& operator+=(const NormCoeff& o);
  NormCoeff& operator-=(const NormCoeff& o);
  NormCoeff& operator*=(const NormCoeff& o);
  NormCoeff& operator*=(const Rat& c);

  friend NormCoeff operator+(NormCoeff a, const NormCoeff& b) { return a += b; }
  friend NormCoeff operator-(NormCoeff a, const NormCoeff& b) { return a -= b; }
  friend NormCoeff operator*(NormCoeff a, const NormCoeff& b) { return a *= b; }
  friend NormCoeff operator*(NormCoeff a, const Rat& c) { return a *= c; }
  friend NormCoeff operator*(const Rat& c, NormCoeff a) { return a *= c; }
  NormCoeff operator-() const { return NormCoeff(-num_, denom_power_); }

  friend bool operator==(const NormCoeff& a, const NormCoeff& b) {
    return a.denom_power_ == b.denom_power_ && a.num_ == b.num_;
  }

 private:
  void canonicalize();

  YPoly num_;
  int denom_power_ = 0;
};

// Certifies that c is a polynomial in y and returns it; throws NotPolynomial
// naming the offending value otherwise.
YPoly clear_denominator(const NormCoeff& c);

// "1 - y" or "(y)/(1+y)^2".
std::string to_string(const NormCoeff& c);

}  // namespace chiclass
