#include "chiclass/ypoly.hpp"

#include <algorithm>
#include <cctype>

#include "chiclass/errors.hpp"

namespace chiclass {

YPoly::YPoly(const Rat& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

YPoly::YPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

YPoly YPoly::monomial(const Rat& c, int power) {
  if (power < 0) throw DomainError("negative power of y");
  std::vector<Rat> v(static_cast<std::size_t>(power) + 1, Rat(0));
  v.back() = c;
  return YPoly(std::move(v));
}

void YPoly::strip() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat YPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

Rat YPoly::operator()(const Rat& y0) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * y0 + *it;
  return acc;
}

YPoly& YPoly::operator+=(const YPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  strip();
  return *this;
}

YPoly& YPoly::operator-=(const YPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  strip();
  return *this;
}

YPoly& YPoly::operator*=(const YPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rat> out(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  strip();
  return *this;
}

YPoly& YPoly::operator*=(const Rat& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

YPoly YPoly::operator-() const {
  YPoly out = *this;
  for (auto& x : out.coeffs_) x = -x;
  return out;
}

YPoly::DivResult YPoly::divmod_one_plus_y() const {
  if (coeffs_.empty()) return {YPoly(), Rat(0)};
  // Synthetic division by (y - (-1)), highest coefficient first.
  const std::size_t n = coeffs_.size();
  std::vector<Rat> q(n - 1, Rat(0));
  Rat carry = 0;
  for (std::size_t i = n; i-- > 0;) {
    const Rat v = coeffs_[i] - carry;
    if (i == 0) return {YPoly(std::move(q)), v};
    q[i - 1] = v;
    carry = v;
  }
  return {YPoly(std::move(q)), Rat(0)};
}

YPoly YPoly::pow(int e) const {
  if (e < 0) throw DomainError("negative exponent for YPoly::pow");
  YPoly out(1);
  YPoly base = *this;
  while (e > 0) {
    if (e & 1) out *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return out;
}

std::string to_string(const YPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int k = 0; k <= p.degree(); ++k) {
    const Rat c = p.coeff(k);
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rat mag = negative ? Rat(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) {
      out += is_integral(mag) ? to_string(mag) : "(" + to_string(mag) + ")";
    }
    out += "y";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view s) : s_(s) {}

  YPoly parse() {
    YPoly out;
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out += term() * Rat(sign);
      skip();
    }
    return out;
  }

 private:
  YPoly term() {
    Rat coeff = 1;
    bool have_coeff = false;
    if (peek() == '(') {
      get();
      const auto close = s_.find(')', pos_);
      if (close == std::string_view::npos) fail("unbalanced '('");
      coeff = parse_rat(s_.substr(pos_, close - pos_));
      pos_ = close + 1;
      have_coeff = true;
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Rat(digits());
      skip();
      if (peek() == '/') {
        get();
        skip();
        const Integer den = digits();
        if (den == 0) fail("zero denominator");
        coeff = Rat(coeff.get_num(), den);
        coeff.canonicalize();
      }
      have_coeff = true;
    }
    skip();
    if (peek() == '*') {
      if (!have_coeff) fail("dangling '*'");
      get();
      skip();
    }
    if (peek() != 'y') {
      if (!have_coeff) fail("expected a term");
      return YPoly(coeff);
    }
    get();
    int power = 1;
    skip();
    if (peek() == '^') {
      get();
      skip();
      const Integer e = digits();
      if (!e.fits_sint_p()) fail("exponent too large");
      power = static_cast<int>(e.get_si());
    }
    return YPoly::monomial(coeff, power);
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw DomainError("cannot parse polynomial '" + std::string(s_) + "' at offset " +
                      std::to_string(pos_) + ": " + why);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

YPoly parse_ypoly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace chiclass
