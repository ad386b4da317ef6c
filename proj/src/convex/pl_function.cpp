#include "mavals/convex/pl_function.hpp"

#include <algorithm>
#include <limits>

#include "mavals/convex/convexity.hpp"
#include "mavals/error.hpp"

namespace mav {

PLConvexFunction::PLConvexFunction(std::vector<AffinePiece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw Error("PL function needs at least one piece");
  dim_ = static_cast<int>(pieces_.front().a.size());
  for (const auto& p : pieces_)
    if (p.a.size() != dim_) throw DimensionError("PL pieces of mixed dimension");
}

PLConvexFunction PLConvexFunction::support_of(const Polytope& p) {
  std::vector<AffinePiece> pieces;
  for (const auto& v : p.vertices) pieces.push_back({v, 0.0});
  return PLConvexFunction(std::move(pieces));
}

double PLConvexFunction::operator()(const Eigen::VectorXd& x) const {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& p : pieces_) best = std::max(best, p.a.dot(x) + p.b);
  return best;
}

PLConvexFunction PLConvexFunction::plus_affine(const Eigen::VectorXd& l, double c) const {
  std::vector<AffinePiece> pieces = pieces_;
  for (auto& p : pieces) {
    p.a += l;
    p.b += c;
  }
  return PLConvexFunction(std::move(pieces));
}

LatticeResult pl_lattice(const PLConvexFunction& f, const PLConvexFunction& g, double box, int triples) {
  if (f.dim() != g.dim()) throw DimensionError("pl_lattice: dimension mismatch");
  std::vector<AffinePiece> pieces = f.pieces();
  pieces.insert(pieces.end(), g.pieces().begin(), g.pieces().end());

  LatticeResult r;
  r.max = PLConvexFunction(std::move(pieces));
  r.min = [f, g](const Eigen::VectorXd& x) { return std::min(f(x), g(x)); };
  const Eigen::VectorXd hi = Eigen::VectorXd::Constant(f.dim(), box);
  const auto verdict = midpoint_convexity(r.min, -hi, hi, triples);
  r.min_is_convex = verdict.convex;
  r.worst_violation = verdict.worst_violation;
  return r;
}

}  // namespace mav
