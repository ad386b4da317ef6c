#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "mavals/convex/body.hpp"

namespace mav {

struct AffinePiece {
  Eigen::VectorXd a;
  double b = 0;
};

/// f(x) = max_j <a_j, x> + b_j.
class PLConvexFunction {
 public:
  PLConvexFunction() = default;
  explicit PLConvexFunction(std::vector<AffinePiece> pieces);

  /// Support function of a polytope: one piece (v, 0) per vertex.
  static PLConvexFunction support_of(const Polytope& p);

  int dim() const { return dim_; }
  const std::vector<AffinePiece>& pieces() const { return pieces_; }
  double operator()(const Eigen::VectorXd& x) const;

  /// f + <l, .> + c.
  PLConvexFunction plus_affine(const Eigen::VectorXd& l, double c = 0.0) const;

 private:
  int dim_ = 0;
  std::vector<AffinePiece> pieces_;
};

struct LatticeResult {
  PLConvexFunction max;
  std::function<double(const Eigen::VectorXd&)> min;
  bool min_is_convex = false;
  double worst_violation = 0;
};

/// max(f, g) as the union of piece lists, min(f, g) pointwise, and a
/// midpoint-convexity verdict for the min on [-box, box]^d.
LatticeResult pl_lattice(const PLConvexFunction& f, const PLConvexFunction& g, double box = 2.0,
                         int triples = 10000);

}  // namespace mav
