#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "chiclass/geometry.hpp"
#include "chiclass/ypoly.hpp"

namespace chiclass {

// chi(Omega^p_X) for a complete intersection X in a single P^n, from the
// Euler sequence on P^n and the conormal/restriction sequences of each
// hypersurface section. Integer binomial arithmetic only.
Integer sheaf_euler_omega(const CompleteIntersection& ci, int p);

// sum_p chi(Omega^p_X) y^p.
YPoly chi_y_smooth_oracle(const CompleteIntersection& ci);

// Cut-and-paste description of a variety, evaluated through additivity of
// the compactly supported chi_y genus. Geometric claims (B closed in A, the
// curve being a smooth rational curve, ...) are trusted.
class ScissorExpr {
 public:
  enum class Op {
    Projective,      // P^n
    Affine,          // A^n
    Torus,           // (C^*)^n
    Point,
    Named,           // reference into a ScissorEnv
    DisjointUnion,
    Complement,      // first minus second
    Product,
    BlowupPoints,    // blow up `count` points
    ContractCurves,  // replace `count` rational curves by points
  };

  static ScissorExpr projective(int n);
  static ScissorExpr affine(int n);
  static ScissorExpr torus(int n = 1);
  static ScissorExpr point();
  static ScissorExpr named(std::string name);
  static ScissorExpr disjoint_union(ScissorExpr a, ScissorExpr b);
  static ScissorExpr complement(ScissorExpr a, ScissorExpr b);
  static ScissorExpr product(ScissorExpr a, ScissorExpr b);
  static ScissorExpr blowup_points(ScissorExpr x, int count);
  static ScissorExpr contract_curves(ScissorExpr x, int count);

  Op op() const { return op_; }
  int param() const { return param_; }
  const std::string& name() const { return name_; }
  const ScissorExpr& child(std::size_t i) const { return *children_.at(i); }
  std::size_t num_children() const { return children_.size(); }

 private:
  ScissorExpr(Op op, int param) : op_(op), param_(param) {}

  Op op_;
  int param_ = 0;
  std::string name_;
  std::vector<std::shared_ptr<const ScissorExpr>> children_;
};

using ScissorEnv = std::map<std::string, ScissorExpr>;

struct ScissorValue {
  YPoly chi_c;
  int dim = 0;
};

ScissorValue scissor_evaluate(const ScissorExpr& e, const ScissorEnv& env = {});

YPoly scissor_chi_y(const ScissorExpr& e, const ScissorEnv& env = {});

// chi_y^c of P^n = sum_{i<=n} (-y)^i.
YPoly chi_c_projective(int n);

}  // namespace chiclass
