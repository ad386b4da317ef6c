#include "mavals/convex/slabs.hpp"

#include <algorithm>
#include <limits>

#include "mavals/error.hpp"

namespace mav {

namespace {

void push_unique(Points& pts, const Eigen::VectorXd& x) {
  for (const auto& q : pts)
    if ((q - x).cwiseAbs().maxCoeff() <= 1e-12 * (1.0 + x.cwiseAbs().maxCoeff())) return;
  pts.push_back(x);
}

}  // namespace

Polytope clip_halfspace(const Polytope& p, const Eigen::VectorXd& normal, double offset) {
  Polytope out;
  std::vector<double> side;
  for (const auto& v : p.vertices) side.push_back(normal.dot(v) - offset);
  for (size_t i = 0; i < p.vertices.size(); ++i)
    if (side[i] <= 0) push_unique(out.vertices, p.vertices[i]);
  for (size_t i = 0; i < p.vertices.size(); ++i)
    for (size_t j = i + 1; j < p.vertices.size(); ++j) {
      if ((side[i] < 0 && side[j] > 0) || (side[i] > 0 && side[j] < 0)) {
        const double lam = side[i] / (side[i] - side[j]);
        push_unique(out.vertices, p.vertices[i] + lam * (p.vertices[j] - p.vertices[i]));
      }
    }
  if (out.vertices.empty()) throw Error("clip_halfspace: empty intersection");
  return out;
}

UnionConvexPair generate_union_convex_pair(const Polytope& k, const Eigen::VectorXd& u, double s, double t) {
  if (!(s < t)) throw Error("generate_union_convex_pair: need s < t");
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  for (const auto& v : k.vertices) {
    lo = std::min(lo, u.dot(v));
    hi = std::max(hi, u.dot(v));
  }
  if (!(lo < t) || !(hi > s)) throw Error("generate_union_convex_pair: slab misses the body");
  UnionConvexPair pair;
  pair.a = clip_halfspace(k, u, t);
  pair.b = clip_halfspace(k, -u, -s);
  pair.meet = clip_halfspace(pair.a, -u, -s);
  return pair;
}

UnionConvexPair generate_union_convex_pair(const Polytope& k, double s, double t) {
  Eigen::VectorXd e1 = Eigen::VectorXd::Zero(k.dim());
  e1(0) = 1.0;
  return generate_union_convex_pair(k, e1, s, t);
}

}  // namespace mav
