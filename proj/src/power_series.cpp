#include "chiclass/power_series.hpp"

#include <algorithm>

#include "chiclass/errors.hpp"

namespace chiclass {

PowerSeries::PowerSeries(int order) {
  if (order < 0) throw DomainError("power series order must be >= 0");
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

PowerSeries::PowerSeries(std::vector<NormCoeff> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw DomainError("power series needs at least a constant term");
}

bool PowerSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const NormCoeff& c) { return c.is_zero(); });
}

PowerSeries PowerSeries::truncated(int order) const {
  PowerSeries out(order);
  for (int j = 0; j <= std::min(order, this->order()); ++j) out[j] = (*this)[j];
  return out;
}

PowerSeries PowerSeries::scaled_argument(const NormCoeff& c) const {
  PowerSeries out = *this;
  NormCoeff power = 1;
  for (int j = 1; j <= order(); ++j) {
    power *= c;
    out[j] *= power;
  }
  return out;
}

PowerSeries PowerSeries::specialized(const Rat& y0) const {
  PowerSeries out(order());
  for (int j = 0; j <= order(); ++j) out[j] = NormCoeff((*this)[j].evaluate(y0));
  return out;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& o) {
  coeffs_.resize(static_cast<std::size_t>(std::min(order(), o.order())) + 1);
  for (int j = 0; j <= order(); ++j) (*this)[j] += o[j];
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& o) {
  coeffs_.resize(static_cast<std::size_t>(std::min(order(), o.order())) + 1);
  for (int j = 0; j <= order(); ++j) (*this)[j] -= o[j];
  return *this;
}

PowerSeries& PowerSeries::operator*=(const NormCoeff& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  PowerSeries out(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Both recurrences come from g' = f' g with g = exp(f):
//   n g_n = sum_{k=1}^{n} k f_k g_{n-k}.
PowerSeries series_exp(const PowerSeries& s, int order) {
  if (!s.constant_term().is_zero()) throw DomainError("exp of a series with nonzero constant term");
  if (order < 0) throw DomainError("series order must be >= 0");
  const PowerSeries f = s.truncated(order);
  PowerSeries g(order);
  g[0] = 1;
  for (int n = 1; n <= order; ++n) {
    NormCoeff acc;
    for (int k = 1; k <= n; ++k) {
      if (!f[k].is_zero()) acc += f[k] * g[n - k] * Rat(k);
    }
    g[n] = acc * Rat(1, n);
  }
  return g;
}

PowerSeries series_log(const PowerSeries& s, int order) {
  if (s.constant_term() != NormCoeff(1)) throw DomainError("log of a series whose constant term is not 1");
  if (order < 0) throw DomainError("series order must be >= 0");
  const PowerSeries g = s.truncated(order);
  PowerSeries f(order);
  for (int n = 1; n <= order; ++n) {
    NormCoeff acc = g[n] * Rat(n);
    for (int k = 1; k < n; ++k) {
      if (!f[k].is_zero()) acc -= f[k] * g[n - k] * Rat(k);
    }
    f[n] = acc * Rat(1, n);
  }
  return f;
}

PowerSeries series_inverse(const PowerSeries& s) {
  const auto inv0 = s.constant_term().inverse();
  if (!inv0) throw DomainError("series constant term " + to_string(s.constant_term()) + " is not a unit");
  PowerSeries out(s.order());
  out[0] = *inv0;
  for (int n = 1; n <= s.order(); ++n) {
    NormCoeff acc;
    for (int k = 1; k <= n; ++k) {
      if (!s[k].is_zero()) acc += s[k] * out[n - k];
    }
    out[n] = -(acc * *inv0);
  }
  return out;
}

}  // namespace chiclass
