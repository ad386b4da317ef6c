#include "mavals/valuation/hull.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "mavals/error.hpp"

namespace mav {

namespace {

double cross(const Eigen::VectorXd& o, const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  return (a(0) - o(0)) * (b(1) - o(1)) - (a(1) - o(1)) * (b(0) - o(0));
}

int affine_rank(const Points& pts, const Eigen::VectorXd& c, double tol) {
  Eigen::MatrixXd m(pts.front().size(), pts.size());
  for (size_t k = 0; k < pts.size(); ++k) m.col(k) = pts[k] - c;
  Eigen::FullPivLU<Eigen::MatrixXd> lu(m);
  lu.setThreshold(tol);
  return static_cast<int>(lu.rank());
}

// Calls fn(indices) for every increasing k-subset of {0..m-1}; stops early if fn returns false.
template <class Fn>
void for_each_subset(int m, int k, Fn fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(idx)) return;
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

Points convex_hull_2d(const Points& in) {
  Points pts = in;
  std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) {
    return a(0) < b(0) || (a(0) == b(0) && a(1) < b(1));
  });
  pts.erase(std::unique(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a == b; }), pts.end());
  if (pts.size() < 3) return pts;

  Points hull(2 * pts.size());
  size_t k = 0;
  for (size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (size_t i = pts.size() - 1, t = k + 1; i > 0; --i) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], pts[i - 1]) <= 0) --k;
    hull[k++] = pts[i - 1];
  }
  hull.resize(k - 1);
  return hull;
}

double hull_volume(const Points& pts) {
  if (pts.empty()) return 0.0;
  const int d = static_cast<int>(pts.front().size());
  for (const auto& p : pts)
    if (p.size() != d) throw DimensionError("hull_volume: points of mixed dimension");
  if (static_cast<int>(pts.size()) < d + 1) return 0.0;

  if (d == 1) {
    double lo = pts[0](0), hi = lo;
    for (const auto& p : pts) {
      lo = std::min(lo, p(0));
      hi = std::max(hi, p(0));
    }
    return hi - lo;
  }
  if (d == 2) {
    const Points h = convex_hull_2d(pts);
    double area = 0;
    for (size_t i = 0; i < h.size(); ++i) {
      const auto& a = h[i];
      const auto& b = h[(i + 1) % h.size()];
      area += a(0) * b(1) - a(1) * b(0);
    }
    return 0.5 * std::abs(area);
  }

  Eigen::VectorXd c = Eigen::VectorXd::Zero(d);
  for (const auto& p : pts) c += p;
  c /= static_cast<double>(pts.size());
  double scale = 0;
  for (const auto& p : pts) scale = std::max(scale, (p - c).norm());
  if (scale == 0.0) return 0.0;
  const double tol = 1e-10 * scale;
  if (affine_rank(pts, c, tol) < d) return 0.0;

  const int m = static_cast<int>(pts.size());
  std::set<std::vector<int>> seen;
  double volume = 0;
  for_each_subset(m, d, [&](const std::vector<int>& idx) {
    Eigen::MatrixXd e(d - 1, d);
    for (int k = 1; k < d; ++k) e.row(k - 1) = (pts[idx[k]] - pts[idx[0]]).transpose();
    Eigen::FullPivLU<Eigen::MatrixXd> lu(e);
    lu.setThreshold(1e-12);
    if (lu.rank() < d - 1) return true;
    Eigen::VectorXd normal = lu.kernel().col(0);
    normal.normalize();
    double off = normal.dot(pts[idx[0]]);
    if (normal.dot(c) > off) {
      normal = -normal;
      off = -off;
    }
    std::vector<int> on;
    for (int k = 0; k < m; ++k) {
      const double s = normal.dot(pts[k]) - off;
      if (s > tol) return true;
      if (s >= -tol) on.push_back(k);
    }
    if (!seen.insert(on).second) return true;

    // orthonormal basis of the facet's hyperplane
    Eigen::MatrixXd full = Eigen::MatrixXd::Identity(d, d);
    full.col(0) = normal;
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(full);
    const Eigen::MatrixXd q = qr.householderQ();
    Points proj;
    for (int k : on) proj.push_back(q.rightCols(d - 1).transpose() * pts[k]);
    volume += (off - normal.dot(c)) * hull_volume(proj) / d;
    return true;
  });
  return volume;
}

}  // namespace mav
