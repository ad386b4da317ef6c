#pragma once

#include <Eigen/Dense>

#include "mavals/algebra/hermitian.hpp"

namespace mav {

/// Matrix of x -> A x on H^n = R^{4n}, coordinates (t1, x1, y1, z1, t2, ...).
Eigen::MatrixXd realize_quat_matrix(const QuaternionMatrix& a);

/// Moore determinant of a quaternionic Hermitian matrix (R and C inputs are
/// embedded). The eigenvalues of the realization come in groups of four equal
/// values, one group per quaternionic eigenvalue; P is the product over
/// groups. Throws NumericalError when a group is not tight or when
/// P^4 disagrees with det of the realization.
double moore_det(const HermitianMatrix& a);

/// ab - |q|^2 for [[a, q], [conj(q), b]].
double oct_det2(const HermitianMatrix& a);

/// Field-appropriate determinant: real, complex, Moore, or the 2x2 octonionic one.
double det(const HermitianMatrix& a);

/// Same matrix viewed over a larger field (R -> C -> H; anything of size 2 -> O2).
HermitianMatrix promote(const HermitianMatrix& a, Field to);

}  // namespace mav
