#pragma once

#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "chiclass/rational.hpp"

namespace chiclass {

// Polynomial in the Hirzebruch parameter y with exact rational coefficients.
// Trailing zero coefficients are always stripped, so the zero polynomial has
// an empty coefficient vector and degree kZeroDegree.
class YPoly {
 public:
  // Acts as "minus infinity": smaller than every real degree.
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  YPoly() = default;
  YPoly(const Rat& constant);  // NOLINT(google-explicit-constructor)
  YPoly(long constant) : YPoly(Rat(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit YPoly(std::vector<Rat> coeffs);

  static YPoly y() { return monomial(1, 1); }
  static YPoly one_plus_y() { return YPoly(std::vector<Rat>{1, 1}); }
  static YPoly monomial(const Rat& c, int power);

  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }

  // Coefficient of y^k, zero beyond the degree.
  Rat coeff(int k) const;
  std::span<const Rat> coeffs() const { return coeffs_; }

  Rat operator()(const Rat& y0) const;

  YPoly& operator+=(const YPoly& o);
  YPoly& operator-=(const YPoly& o);
  YPoly& operator*=(const YPoly& o);
  YPoly& operator*=(const Rat& c);

  friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
  friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }
  friend YPoly operator*(YPoly a, const YPoly& b) { return a *= b; }
  friend YPoly operator*(YPoly a, const Rat& c) { return a *= c; }
  friend YPoly operator*(const Rat& c, YPoly a) { return a *= c; }
  YPoly operator-() const;

  friend bool operator==(const YPoly& a, const YPoly& b) { return a.coeffs_ == b.coeffs_; }

  // Exact quotient and remainder of division by (1 + y).
  struct DivResult;
  DivResult divmod_one_plus_y() const;

  YPoly pow(int e) const;

 private:
  void strip();

  std::vector<Rat> coeffs_;
};

struct YPoly::DivResult {
  YPoly quotient;
  Rat remainder;
};

// Ascending powers with explicit signs: "1 - 7y + y^2", "(1/2)y - 3y^3", "0".
std::string to_string(const YPoly& p);

// Inverse of to_string; also accepts "3/2 y", "1/2*y^2", "-y", "+ 2".
YPoly parse_ypoly(std::string_view text);

}  // namespace chiclass
