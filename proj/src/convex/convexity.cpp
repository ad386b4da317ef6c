#include "mavals/convex/convexity.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mavals/error.hpp"

namespace mav {

ConvexityVerdict midpoint_convexity(const std::function<double(const Eigen::VectorXd&)>& f,
                                    const Eigen::VectorXd& lo, const Eigen::VectorXd& hi, int triples, double tol,
                                    std::uint64_t seed) {
  if (lo.size() != hi.size()) throw DimensionError("midpoint_convexity: box bounds differ in dimension");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  const Eigen::Index d = lo.size();
  auto sample = [&] {
    Eigen::VectorXd x(d);
    for (Eigen::Index i = 0; i < d; ++i) x(i) = lo(i) + (hi(i) - lo(i)) * u01(rng);
    return x;
  };

  ConvexityVerdict v;
  v.triples = triples;
  v.worst_violation = -std::numeric_limits<double>::infinity();
  for (int t = 0; t < triples; ++t) {
    const Eigen::VectorXd x = sample(), y = sample();
    const double fx = f(x), fy = f(y);
    const double gap = f(0.5 * (x + y)) - 0.5 * (fx + fy);
    v.worst_violation = std::max(v.worst_violation, gap);
    if (gap > tol * (1.0 + std::abs(fx) + std::abs(fy))) v.convex = false;
  }
  return v;
}

}  // namespace mav
