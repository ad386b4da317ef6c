#include "mavals/valuation/ma_measure.hpp"

#include <algorithm>
#include <cmath>

#include "mavals/error.hpp"
#include "mavals/valuation/hull.hpp"

namespace mav {

AtomicMeasure ma_measure_pl(const PLConvexFunction& f) {
  const int d = f.dim();
  if (d > 3) throw DimensionError("ma_measure_pl: exact mode supports d <= 3, use ma_total_mass");
  const auto& pieces = f.pieces();
  const int m = static_cast<int>(pieces.size());
  AtomicMeasure mu;
  if (m < d + 1) return mu;

  double scale = 1.0;
  for (const auto& p : pieces) scale = std::max({scale, p.a.cwiseAbs().maxCoeff(), std::abs(p.b)});
  const double tol = 1e-10 * scale;

  Points vertices;
  std::vector<int> idx(d + 1);
  for (int i = 0; i <= d; ++i) idx[i] = i;
  while (true) {
    Eigen::MatrixXd sys(d + 1, d + 1);
    Eigen::VectorXd rhs(d + 1);
    for (int r = 0; r <= d; ++r) {
      sys.row(r).head(d) = pieces[idx[r]].a.transpose();
      sys(r, d) = -1.0;
      rhs(r) = -pieces[idx[r]].b;
    }
    Eigen::FullPivLU<Eigen::MatrixXd> lu(sys);
    if (lu.isInvertible()) {
      const Eigen::VectorXd sol = lu.solve(rhs);
      const Eigen::VectorXd x = sol.head(d);
      if (f(x) <= sol(d) + tol * (1.0 + x.norm())) {
        const bool dup = std::any_of(vertices.begin(), vertices.end(), [&](const auto& v) {
          return (v - x).norm() <= 1e-9 * (1.0 + x.norm());
        });
        if (!dup) vertices.push_back(x);
      }
    }
    int i = d;
    while (i >= 0 && idx[i] == m - (d + 1) + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j <= d; ++j) idx[j] = idx[j - 1] + 1;
  }

  for (const auto& x : vertices) {
    const double fx = f(x);
    Points grads;
    for (const auto& p : pieces)
      if (p.a.dot(x) + p.b >= fx - tol * (1.0 + x.norm())) grads.push_back(p.a);
    const double mass = hull_volume(grads);
    if (mass > 0) {
      mu.atoms.push_back({x, mass});
      mu.total_mass += mass;
    }
  }
  return mu;
}

double ma_total_mass(const PLConvexFunction& f) {
  Points grads;
  for (const auto& p : f.pieces()) grads.push_back(p.a);
  return hull_volume(grads);
}

}  // namespace mav
