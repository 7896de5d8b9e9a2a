#include "chiclass/singularity.hpp"

#include <algorithm>
#include <numeric>

#include "chiclass/classes.hpp"
#include "chiclass/errors.hpp"

namespace chiclass {
namespace {

using IntPoly = std::vector<Integer>;

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Binomial u^lo +/- u^hi as a dense vector.
IntPoly binomial_poly(std::size_t lo, const Integer& c_lo, std::size_t hi, const Integer& c_hi) {
  IntPoly p(hi + 1, Integer(0));
  p[lo] += c_lo;
  p[hi] += c_hi;
  return p;
}

}  // namespace

Weights::Weights(std::vector<Rat> w) : w_(std::move(w)) {
  if (w_.empty()) throw DomainError("weights need at least one variable");
  for (auto& x : w_) {
    x.canonicalize();
    if (x <= 0 || x >= 1) throw DomainError("weight " + to_string(x) + " not in (0,1)");
  }
}

SpectrumData::SpectrumData(std::vector<Rat> entries, int num_variables)
    : entries_(std::move(entries)), n_(num_variables) {
  if (n_ < 1) throw DomainError("spectrum needs n >= 1");
  for (auto& a : entries_) a.canonicalize();
  std::sort(entries_.begin(), entries_.end());
  for (const auto& a : entries_) {
    if (a <= 0 || a >= n_) throw DomainError("spectral number " + to_string(a) + " not in (0," + std::to_string(n_) + ")");
  }
  std::vector<Rat> mirrored;
  mirrored.reserve(entries_.size());
  for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) mirrored.push_back(Rat(n_) - *it);
  if (mirrored != entries_) throw DomainError("spectrum is not symmetric under a -> n - a");
}

std::string to_string(const SpectrumData& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.entries().size(); ++i) {
    if (i) out += ", ";
    out += to_string(s.entries()[i]);
  }
  return out + "}";
}

SpectrumData IsolatedSingularPoint::spectrum() const {
  if (const auto* w = std::get_if<Weights>(&data)) return spectrum_wh(*w);
  return std::get<SpectrumData>(data);
}

SpectrumData spectrum_wh(const Weights& w) {
  // Work in u = t^{1/L} with L the common denominator of the weights.
  Integer lcm = 1;
  for (const auto& x : w.values()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t());
  if (!lcm.fits_ulong_p() || lcm > 100000) throw DomainError("weight denominators too large");
  const auto L = static_cast<std::size_t>(lcm.get_ui());

  IntPoly num{Integer(1)};
  IntPoly den{Integer(1)};
  for (const auto& x : w.values()) {
    const Rat scaled = x * Rat(lcm);
    const auto a = static_cast<std::size_t>(scaled.get_num().get_ui());
    num = multiply(num, binomial_poly(a, 1, L, -1));  // u^a - u^L
    den = multiply(den, binomial_poly(0, 1, a, -1));  // 1 - u^a
  }
  while (!num.empty() && num.back() == 0) num.pop_back();
  while (!den.empty() && den.back() == 0) den.pop_back();

  // den has constant term 1, so the quotient is computed from the bottom up.
  const std::size_t qdeg = num.size() - den.size();
  IntPoly quot(qdeg + 1, Integer(0));
  for (std::size_t k = 0; k <= qdeg; ++k) {
    Integer v = num[k];
    for (std::size_t j = 1; j < den.size() && j <= k; ++j) v -= den[j] * quot[k - j];
    quot[k] = v;
  }
  if (multiply(quot, den) != num) {
    throw DomainError("weights do not define an isolated singularity (spectrum product is not a polynomial)");
  }

  std::vector<Rat> entries;
  for (std::size_t k = 0; k < quot.size(); ++k) {
    if (quot[k] < 0) throw DomainError("weights give a negative spectral multiplicity");
    for (Integer m = 0; m < quot[k]; ++m) {
      Rat a(Integer(static_cast<unsigned long>(k)), lcm);
      a.canonicalize();
      entries.push_back(a);
    }
  }
  return SpectrumData(std::move(entries), w.num_variables());
}

long milnor_number(const SpectrumData& s) { return static_cast<long>(s.entries().size()); }

long milnor_number(const Weights& w) {
  Rat mu = 1;
  for (const auto& x : w.values()) mu *= Rat(1) / x - 1;
  if (!is_integral(mu)) throw DomainError("prod(1/w_i - 1) = " + to_string(mu) + " is not an integer");
  return mu.get_num().get_si();
}

int hodge_level(const Rat& alpha, int n) { return static_cast<int>(floor(Rat(n) - alpha).get_si()); }

YPoly chi_y_milnor_fiber(const SpectrumData& s) {
  const int n = s.num_variables();
  YPoly out;
  for (const auto& a : s.entries()) {
    const int p = hodge_level(a, n);
    out += YPoly::monomial(p % 2 ? -1 : 1, p);  // (-y)^p
  }
  return (n - 1) % 2 ? -out : out;
}

YPoly milnor_class_isolated(const CompleteIntersection& ci, std::span<const IsolatedSingularPoint> sings) {
  YPoly out;
  for (const auto& pt : sings) {
    const SpectrumData s = pt.spectrum();
    if (s.num_variables() != ci.dimension() + 1) {
      throw DomainError("singular point '" + pt.label + "' has " + std::to_string(s.num_variables()) +
                        " local variables; expected dim X + 1 = " + std::to_string(ci.dimension() + 1));
    }
    out += chi_y_milnor_fiber(s);
  }
  return out;
}

YPoly verify_cor2_degree0(const CompleteIntersection& ci, std::span<const IsolatedSingularPoint> sings,
                          const YPoly& chi_y_of_x) {
  return degree_polynomial(virtual_class_via_Ty(ci)) - chi_y_of_x - milnor_class_isolated(ci, sings);
}

RecursionResult hm_recursion_degree0(std::span<const YPoly> levels) {
  RecursionResult out;
  if (levels.empty()) {
    out.warnings.push_back("no recursion levels given: treating the input as smooth (M_y = 0)");
    return out;
  }
  out.total = std::accumulate(levels.begin(), levels.end(), YPoly());
  return out;
}

}  // namespace chiclass
