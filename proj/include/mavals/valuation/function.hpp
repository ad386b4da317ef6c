#pragma once

#include <functional>
#include <string>

#include <Eigen/Dense>

#include "mavals/convex/body.hpp"
#include "mavals/convex/pl_function.hpp"

namespace mav {

enum class Regularity {
  Smooth,          // C^2 everywhere
  SmoothOffOrigin, // C^2 away from 0 (support functions of smooth bodies)
  Nonsmooth,       // needs smoothing before a Hessian exists
};

/// A convex (or C^2) function on R^dim as seen by the valuation evaluator.
struct Function {
  int dim = 0;
  std::function<double(const Eigen::VectorXd&)> value;
  Regularity regularity = Regularity::Smooth;
  /// Optional analytic Hessian; otherwise finite differences with fd_step.
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> hessian;
  /// Optional closed form of Hess(f * G_sigma) for non-smooth f.
  std::function<Eigen::MatrixXd(const Eigen::VectorXd&, double)> smoothed_hessian;
  double fd_step = 0.0;
  std::string label;

  double operator()(const Eigen::VectorXd& x) const { return value(x); }

  /// Hessian of a smooth function (analytic if available, else finite differences).
  Eigen::MatrixXd hessian_at(const Eigen::VectorXd& x) const;

  /// f + <l, .> + c; analytic Hessians carry over unchanged.
  Function plus_affine(const Eigen::VectorXd& l, double c = 0.0) const;

  static Function smooth(int dim, std::function<double(const Eigen::VectorXd&)> f,
                         std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> hess = nullptr,
                         std::string label = "smooth");
  static Function from_body(const ConvexBody& k);
  static Function from_pl(const PLConvexFunction& f);
  /// Pointwise max / min, always treated as non-smooth.
  static Function max_of(const Function& f, const Function& g);
  static Function min_of(const Function& f, const Function& g);
};

}  // namespace mav
