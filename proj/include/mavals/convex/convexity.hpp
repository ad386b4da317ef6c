#pragma once

#include <cstdint>
#include <functional>

#include <Eigen/Dense>

namespace mav {

struct ConvexityVerdict {
  bool convex = true;
  double worst_violation = 0;  // max of f(mid) - (f(x)+f(y))/2
  int triples = 0;
};

/// Samples x, y uniformly in the box [lo, hi] and checks
/// f((x+y)/2) <= (f(x)+f(y))/2 + tol * (1 + |f(x)| + |f(y)|).
/// Advisory only: a passing verdict is not a proof.
ConvexityVerdict midpoint_convexity(const std::function<double(const Eigen::VectorXd&)>& f,
                                    const Eigen::VectorXd& lo, const Eigen::VectorXd& hi, int triples = 10000,
                                    double tol = 1e-8, std::uint64_t seed = 1);

}  // namespace mav
