#include "chiclass/oracles.hpp"

#include <map>
#include <tuple>

#include "chiclass/errors.hpp"

namespace chiclass {
namespace {

class SheafEuler {
 public:
  explicit SheafEuler(const CompleteIntersection& ci) : n_(ci.ambient().dimension()) {
    if (ci.ambient().num_factors() != 1) throw DomainError("sheaf Euler oracle needs a single P^n ambient");
    for (const auto& a : ci.multidegrees()) degrees_.push_back(a[0]);
  }

  // chi(Omega^p_{X_j}(k)), X_j cut by the first j sections.
  Integer omega(int j, int p, long k) {
    if (p < 0) return 0;
    const auto key = std::make_tuple(j, p, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Integer v;
    if (j == 0) {
      // Lambda^p of 0 -> Omega^1 -> O(-1)^{n+1} -> O -> 0.
      v = p == 0 ? projective_structure_sheaf(k) : binomial(n_ + 1, p) * projective_structure_sheaf(k - p) - omega(0, p - 1, k);
    } else {
      const long a = degrees_[static_cast<std::size_t>(j - 1)];
      // 0 -> Omega^p_X(k-a) -> Omega^p_X(k) -> Omega^p_X|_{X'}(k) -> 0 and
      // 0 -> Omega^{p-1}_{X'}(k-a) -> Omega^p_X|_{X'}(k) -> Omega^p_{X'}(k) -> 0.
      const Integer restricted = omega(j - 1, p, k) - omega(j - 1, p, k - a);
      v = restricted - omega(j, p - 1, k - a);
    }
    memo_.emplace(key, v);
    return v;
  }

  int levels() const { return static_cast<int>(degrees_.size()); }

 private:
  // chi(O_{P^n}(k)) = (k+1)(k+2)...(k+n)/n!, valid for every integer k.
  Integer projective_structure_sheaf(long k) const {
    Integer prod = 1;
    for (long i = 1; i <= n_; ++i) prod *= Integer(k + i);
    return prod / factorial(n_);
  }

  long n_;
  std::vector<long> degrees_;
  std::map<std::tuple<int, int, long>, Integer> memo_;
};

}  // namespace

Integer sheaf_euler_omega(const CompleteIntersection& ci, int p) {
  if (p < 0 || p > ci.dimension()) throw DomainError("p out of range [0, dim X]");
  SheafEuler oracle(ci);
  return oracle.omega(oracle.levels(), p, 0);
}

YPoly chi_y_smooth_oracle(const CompleteIntersection& ci) {
  SheafEuler oracle(ci);
  std::vector<Rat> coeffs;
  for (int p = 0; p <= ci.dimension(); ++p) coeffs.emplace_back(oracle.omega(oracle.levels(), p, 0));
  return YPoly(std::move(coeffs));
}

YPoly chi_c_projective(int n) {
  YPoly out;
  for (int i = 0; i <= n; ++i) out += YPoly::monomial(i % 2 ? -1 : 1, i);
  return out;
}

ScissorExpr ScissorExpr::projective(int n) {
  if (n < 0) throw DomainError("P^n needs n >= 0");
  return ScissorExpr(Op::Projective, n);
}

ScissorExpr ScissorExpr::affine(int n) {
  if (n < 0) throw DomainError("A^n needs n >= 0");
  return ScissorExpr(Op::Affine, n);
}

ScissorExpr ScissorExpr::torus(int n) {
  if (n < 0) throw DomainError("torus dimension must be >= 0");
  return ScissorExpr(Op::Torus, n);
}

ScissorExpr ScissorExpr::point() { return ScissorExpr(Op::Point, 0); }

ScissorExpr ScissorExpr::named(std::string name) {
  ScissorExpr e(Op::Named, 0);
  e.name_ = std::move(name);
  return e;
}

ScissorExpr ScissorExpr::disjoint_union(ScissorExpr a, ScissorExpr b) {
  ScissorExpr e(Op::DisjointUnion, 0);
  e.children_ = {std::make_shared<const ScissorExpr>(std::move(a)), std::make_shared<const ScissorExpr>(std::move(b))};
  return e;
}

ScissorExpr ScissorExpr::complement(ScissorExpr a, ScissorExpr b) {
  ScissorExpr e(Op::Complement, 0);
  e.children_ = {std::make_shared<const ScissorExpr>(std::move(a)), std::make_shared<const ScissorExpr>(std::move(b))};
  return e;
}

ScissorExpr ScissorExpr::product(ScissorExpr a, ScissorExpr b) {
  ScissorExpr e(Op::Product, 0);
  e.children_ = {std::make_shared<const ScissorExpr>(std::move(a)), std::make_shared<const ScissorExpr>(std::move(b))};
  return e;
}

ScissorExpr ScissorExpr::blowup_points(ScissorExpr x, int count) {
  if (count < 0) throw DomainError("blowup count must be >= 0");
  ScissorExpr e(Op::BlowupPoints, count);
  e.children_ = {std::make_shared<const ScissorExpr>(std::move(x))};
  return e;
}

ScissorExpr ScissorExpr::contract_curves(ScissorExpr x, int count) {
  if (count < 0) throw DomainError("contraction count must be >= 0");
  ScissorExpr e(Op::ContractCurves, count);
  e.children_ = {std::make_shared<const ScissorExpr>(std::move(x))};
  return e;
}

namespace {

ScissorValue evaluate(const ScissorExpr& e, const ScissorEnv& env, int depth) {
  if (depth > 256) throw DomainError("scissor expression nests too deeply (cyclic names?)");
  using Op = ScissorExpr::Op;
  switch (e.op()) {
    case Op::Projective:
      return {chi_c_projective(e.param()), e.param()};
    case Op::Affine:
      return {YPoly::monomial(e.param() % 2 ? -1 : 1, e.param()), e.param()};
    case Op::Torus:
      return {(-YPoly::one_plus_y()).pow(e.param()), e.param()};
    case Op::Point:
      return {YPoly(1), 0};
    case Op::Named: {
      const auto it = env.find(e.name());
      if (it == env.end()) throw DomainError("unknown scissor name '" + e.name() + "'");
      return evaluate(it->second, env, depth + 1);
    }
    case Op::DisjointUnion: {
      const auto a = evaluate(e.child(0), env, depth + 1);
      const auto b = evaluate(e.child(1), env, depth + 1);
      return {a.chi_c + b.chi_c, std::max(a.dim, b.dim)};
    }
    case Op::Complement: {
      const auto a = evaluate(e.child(0), env, depth + 1);
      const auto b = evaluate(e.child(1), env, depth + 1);
      if (b.dim > a.dim) throw DomainError("complement removes a piece of larger dimension");
      return {a.chi_c - b.chi_c, a.dim};
    }
    case Op::Product: {
      const auto a = evaluate(e.child(0), env, depth + 1);
      const auto b = evaluate(e.child(1), env, depth + 1);
      return {a.chi_c * b.chi_c, a.dim + b.dim};
    }
    case Op::BlowupPoints: {
      auto x = evaluate(e.child(0), env, depth + 1);
      if (x.dim < 1) throw DomainError("cannot blow up points of a " + std::to_string(x.dim) + "-dimensional variety");
      // A point is replaced by an exceptional P^{dim-1}.
      x.chi_c += (chi_c_projective(x.dim - 1) - YPoly(1)) * Rat(e.param());
      return x;
    }
    case Op::ContractCurves: {
      auto x = evaluate(e.child(0), env, depth + 1);
      if (x.dim < 1) throw DomainError("cannot contract curves in a " + std::to_string(x.dim) + "-dimensional variety");
      x.chi_c += (YPoly(1) - chi_c_projective(1)) * Rat(e.param());
      return x;
    }
  }
  throw DomainError("unknown scissor operation");
}

}  // namespace

ScissorValue scissor_evaluate(const ScissorExpr& e, const ScissorEnv& env) { return evaluate(e, env, 0); }

YPoly scissor_chi_y(const ScissorExpr& e, const ScissorEnv& env) { return scissor_evaluate(e, env).chi_c; }

}  // namespace chiclass
