#pragma once

#include <Eigen/Dense>

#include "mavals/convex/body.hpp"

namespace mav {

/// P intersected with {x : <normal, x> <= offset}. Exact in any dimension: the
/// kept vertices together with the crossing points of every vertex pair
/// straddling the hyperplane (duplicates removed). Throws Error if empty.
Polytope clip_halfspace(const Polytope& p, const Eigen::VectorXd& normal, double offset);

/// A = K cap {<u,x> <= t}, B = K cap {<u,x> >= s}, meet = K cap {s <= <u,x> <= t}.
/// For s < t, A cup B = K, so max(h_A, h_B) = h_K and min(h_A, h_B) = h_meet.
struct UnionConvexPair {
  Polytope a, b, meet;
};

/// Slabs along e_1. Throws Error if s >= t or either half misses K's interior.
UnionConvexPair generate_union_convex_pair(const Polytope& k, double s, double t);
UnionConvexPair generate_union_convex_pair(const Polytope& k, const Eigen::VectorXd& u, double s, double t);

}  // namespace mav
