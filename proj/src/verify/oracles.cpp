#include "mavals/verify/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mavals/error.hpp"
#include "mavals/valuation/hull.hpp"

namespace mav {

namespace {

double section_area(const Polytope& p, double c) {
  Points pts;
  const auto& v = p.vertices;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i](0) == c) pts.push_back(v[i].tail<2>());
    for (size_t j = i + 1; j < v.size(); ++j) {
      const double a = v[i](0) - c, b = v[j](0) - c;
      if ((a < 0 && b > 0) || (a > 0 && b < 0)) {
        const double t = a / (a - b);
        pts.push_back((v[i] + t * (v[j] - v[i])).tail<2>());
      }
    }
  }
  return hull_volume(pts);
}

}  // namespace

double slice_volume_3d(const Polytope& p) {
  if (p.dim() != 3) throw DimensionError("slice_volume_3d: polytope must be 3-dimensional");
  std::vector<double> levels;
  for (const auto& v : p.vertices) levels.push_back(v(0));
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  double vol = 0;
  for (size_t k = 0; k + 1 < levels.size(); ++k) {
    const double a = levels[k], b = levels[k + 1];
    // endpoints are approached from inside the interval to stay on one quadratic piece
    const double eps = 1e-9 * (b - a);
    const double fa = section_area(p, a + eps), fm = section_area(p, 0.5 * (a + b)), fb = section_area(p, b - eps);
    vol += (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  }
  return vol;
}

Polytope random_sphere_polytope(int dim, int m, double radius, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Polytope p;
  for (int k = 0; k < m; ++k) {
    Eigen::VectorXd v(dim);
    for (int i = 0; i < dim; ++i) v(i) = normal(rng);
    p.vertices.push_back(radius * v / v.norm());
  }
  return p;
}

Eigen::MatrixXd random_rotation(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Eigen::MatrixXd g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) g(i, j) = normal(rng);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i)
    if (r(i, i) < 0) q.col(i) = -q.col(i);
  return q;
}

Points random_polygon(int m, double radius, double jitter, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-jitter, jitter);
  const double offset = std::uniform_real_distribution<double>(0, 2 * std::numbers::pi)(rng);
  Points pts;
  for (int k = 0; k < m; ++k) {
    const double th = offset + 2 * std::numbers::pi * k / m + u(rng);
    pts.push_back(Eigen::Vector2d(radius * std::cos(th), radius * std::sin(th)));
  }
  return pts;
}

}  // namespace mav
