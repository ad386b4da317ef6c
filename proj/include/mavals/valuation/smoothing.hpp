#pragma once

#include <vector>

#include <Eigen/Dense>

#include "mavals/convex/body.hpp"
#include "mavals/valuation/function.hpp"

namespace mav {

/// Discrete Gaussian derivative kernels on spacing h with radius ceil(4 sigma / h).
/// order 0 sums to 1; order 1 is exact on linear data; order 2 is exact on
/// quadratics and annihilates constants.
std::vector<double> gaussian_kernel(int order, double h, double sigma);

/// Hessian of f * G_sigma at the nodes lo + (k + 1/2) h of a lattice, for
/// k0 <= k <= k1 per axis. f is sampled on the padded node set and each
/// Hessian component is one separable correlation with derivative-of-Gaussian
/// kernels.
class SmoothedHessianField {
 public:
  SmoothedHessianField(const Function& f, const Eigen::VectorXd& lo, const Eigen::VectorXd& h,
                       const std::vector<long>& k0, const std::vector<long>& k1, double sigma, int threads = 1);

  /// Node with flat index (row-major over the index box, last axis fastest).
  Eigen::MatrixXd at(std::size_t flat) const;
  std::size_t size() const { return count_; }

 private:
  int dim_;
  std::size_t count_;
  std::vector<std::vector<double>> comps_;  // upper triangle, row-major (i, j >= i)
};

/// Hess of (h_P * G_sigma)(y) for a planar polygon P given counter-clockwise:
///   sum over edges of len * tau tau^T * N_sigma(<y, tau>) * Phi(<y, nu> / sigma),
/// tau the edge direction, nu its outer normal.
Eigen::Matrix2d polygon_smoothed_hessian(const Points& ccw, const Eigen::Vector2d& y, double sigma);

/// Support function of a planar polygon placed in R^D by a frame with
/// orthonormal rows (2 x D): h(x) = h_P(frame x). Carries the closed-form
/// smoothed Hessian frame^T H2 frame.
Function embedded_polygon(const Points& polygon, const Eigen::MatrixXd& frame);

}  // namespace mav
