#include "chiclass/graded_ring.hpp"

#include <algorithm>

#include "chiclass/errors.hpp"

namespace chiclass {

RingDesc::RingDesc(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw DomainError("ring needs at least one projective factor");
  for (int n : factors_) {
    if (n < 1) throw DomainError("projective factor dimension must be >= 1");
    dimension_ += n;
    monomial_count_ *= static_cast<std::size_t>(n) + 1;
  }
}

std::vector<int> RingDesc::exponents(std::size_t index) const {
  std::vector<int> e(factors_.size());
  for (std::size_t i = factors_.size(); i-- > 0;) {
    const auto radix = static_cast<std::size_t>(factors_[i]) + 1;
    e[i] = static_cast<int>(index % radix);
    index /= radix;
  }
  return e;
}

std::size_t RingDesc::index(std::span<const int> exponents) const {
  if (exponents.size() != factors_.size()) throw DomainError("exponent vector has wrong length");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (exponents[i] < 0) throw DomainError("negative exponent");
    if (exponents[i] > factors_[i]) return monomial_count_;
    idx = idx * (static_cast<std::size_t>(factors_[i]) + 1) + static_cast<std::size_t>(exponents[i]);
  }
  return idx;
}

int RingDesc::total_degree(std::size_t index) const {
  int d = 0;
  for (int e : exponents(index)) d += e;
  return d;
}

std::string to_string(const RingDesc& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.num_factors(); ++i) {
    if (i) out += " x ";
    out += "P^" + std::to_string(ring.factors()[i]);
  }
  return out;
}

GradedClass::GradedClass(RingDesc ring) : ring_(std::move(ring)), coeffs_(ring_.monomial_count()) {}

GradedClass GradedClass::constant(const RingDesc& ring, const NormCoeff& c) {
  GradedClass out(ring);
  out.coeffs_[0] = c;
  return out;
}

GradedClass GradedClass::linear(const RingDesc& ring, std::span<const int> a) {
  if (a.size() != ring.num_factors()) throw DomainError("multidegree has wrong length for " + to_string(ring));
  GradedClass out(ring);
  std::vector<int> e(ring.num_factors(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    e.assign(ring.num_factors(), 0);
    e[i] = 1;
    out.coeffs_[ring.index(e)] = NormCoeff(a[i]);
  }
  return out;
}

GradedClass GradedClass::generator(const RingDesc& ring, std::size_t i) {
  std::vector<int> a(ring.num_factors(), 0);
  a.at(i) = 1;
  return linear(ring, a);
}

const NormCoeff& GradedClass::coeff(std::span<const int> exponents) const {
  const auto idx = ring_.index(exponents);
  if (idx >= coeffs_.size()) throw DomainError("monomial outside the truncated ring");
  return coeffs_[idx];
}

GradedClass GradedClass::part(int degree) const {
  GradedClass out(ring_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (ring_.total_degree(i) == degree) out.coeffs_[i] = coeffs_[i];
  }
  return out;
}

bool GradedClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const NormCoeff& c) { return c.is_zero(); });
}

void GradedClass::require_same_ring(const GradedClass& o) const {
  if (!(ring_ == o.ring_)) {
    throw DomainError("mixing classes of " + to_string(ring_) + " and " + to_string(o.ring_));
  }
}

GradedClass& GradedClass::operator+=(const GradedClass& o) {
  require_same_ring(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

GradedClass& GradedClass::operator-=(const GradedClass& o) {
  require_same_ring(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

GradedClass& GradedClass::operator*=(const NormCoeff& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

GradedClass operator*(const GradedClass& a, const GradedClass& b) {
  a.require_same_ring(b);
  const RingDesc& ring = a.ring_;
  GradedClass out(ring);
  std::vector<int> e(ring.num_factors());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    const auto ea = ring.exponents(i);
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      const auto eb = ring.exponents(j);
      for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
      const auto idx = ring.index(e);
      if (idx < out.coeffs_.size()) out.coeffs_[idx] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

GradedClass GradedClass::pow(int e) const {
  if (e < 0) return class_inverse(*this).pow(-e);
  GradedClass out = constant(ring_, 1);
  GradedClass base = *this;
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return out;
}

GradedClass class_exp(const GradedClass& x) {
  if (!x.constant_term().is_zero()) throw DomainError("class_exp needs zero constant term");
  const int n = x.ring().dimension();
  GradedClass out = GradedClass::constant(x.ring(), 1);
  GradedClass term = out;
  for (int j = 1; j <= n; ++j) {
    term = term * x * NormCoeff(Rat(1, j));
    out += term;
  }
  return out;
}

GradedClass class_log(const GradedClass& x) {
  if (x.constant_term() != NormCoeff(1)) throw DomainError("class_log needs constant term 1");
  const int n = x.ring().dimension();
  const GradedClass u = x - GradedClass::constant(x.ring(), 1);
  GradedClass out(x.ring());
  GradedClass power = GradedClass::constant(x.ring(), 1);
  for (int j = 1; j <= n; ++j) {
    power = power * u;
    out += power * NormCoeff(Rat(j % 2 ? 1 : -1, j));
  }
  return out;
}

GradedClass class_inverse(const GradedClass& x) {
  const auto inv0 = x.constant_term().inverse();
  if (!inv0) throw DomainError("class with non-invertible constant term " + to_string(x.constant_term()));
  const int n = x.ring().dimension();
  // x = c (1 + u) with u nilpotent; 1/x = c^{-1} sum (-u)^j.
  const GradedClass u = x * *inv0 - GradedClass::constant(x.ring(), 1);
  GradedClass out = GradedClass::constant(x.ring(), 1);
  GradedClass power = out;
  for (int j = 1; j <= n; ++j) {
    power = power * u * NormCoeff(-1);
    out += power;
  }
  return out * *inv0;
}

std::string monomial_name(const RingDesc& ring, std::size_t index) {
  const auto e = ring.exponents(index);
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += ring.num_factors() == 1 ? "h" : "h" + std::to_string(i + 1);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string to_string(const GradedClass& c) {
  const RingDesc& ring = c.ring();
  std::vector<std::size_t> order(ring.monomial_count());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (ring.total_degree(a) != ring.total_degree(b)) return ring.total_degree(a) < ring.total_degree(b);
    return ring.exponents(a) > ring.exponents(b);
  });
  std::string out;
  for (std::size_t idx : order) {
    const NormCoeff& k = c.coeff(idx);
    if (k.is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string mono = monomial_name(ring, idx);
    if (mono.empty()) {
      out += to_string(k);
    } else if (k == NormCoeff(1)) {
      out += mono;
    } else {
      out += "(" + to_string(k) + ")" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace chiclass
