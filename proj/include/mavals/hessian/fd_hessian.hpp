#pragma once

#include <functional>

#include <Eigen/Dense>

#include "mavals/algebra/hermitian.hpp"

namespace mav {

/// A real function on R^dim together with its finite-difference step.
/// step <= 0 selects the default 1e-4 * (1 + |x|).
struct ScalarField {
  int dim = 0;
  std::function<double(const Eigen::VectorXd&)> f;
  double step = 0.0;
};

/// Central second differences, symmetrized. Throws NumericalError if f is
/// not finite somewhere in the stencil.
Eigen::MatrixXd fd_hessian_matrix(const ScalarField& f, const Eigen::VectorXd& x);

HermitianMatrix fd_hessian(const ScalarField& f, const Eigen::VectorXd& x);

}  // namespace mav
