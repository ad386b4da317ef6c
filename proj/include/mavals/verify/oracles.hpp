#pragma once

#include <random>

#include <Eigen/Dense>

#include "mavals/convex/body.hpp"

namespace mav {

/// Volume of a polytope in R^3 by integrating cross-section areas along x_1.
/// The area is piecewise quadratic between vertex levels, so Simpson's rule on
/// each piece is exact. Independent of hull_volume's facet enumeration except
/// for the planar hull of each section.
double slice_volume_3d(const Polytope& p);

/// m points drawn uniformly on the sphere of the given radius.
Polytope random_sphere_polytope(int dim, int m, double radius, std::mt19937_64& rng);

/// Haar-distributed orthogonal matrix.
Eigen::MatrixXd random_rotation(int dim, std::mt19937_64& rng);

/// m vertices on a circle at evenly spaced angles jittered by at most `jitter`.
Points random_polygon(int m, double radius, double jitter, std::mt19937_64& rng);

}  // namespace mav
