#pragma once

#include <Eigen/Dense>

namespace mav {

/// Eigenvalues of a real symmetric matrix by cyclic Jacobi sweeps, ascending.
/// Only the lower triangle's symmetric part is used.
Eigen::VectorXd jacobi_eigenvalues(const Eigen::MatrixXd& a, int max_sweeps = 64);

}  // namespace mav
