#pragma once

#include <Eigen/Dense>

#include "mavals/algebra/hermitian.hpp"
#include "mavals/hessian/fd_hessian.hpp"

namespace mav {

/// Real coordinate layout: coordinate a of F^n occupies real slots
/// a*m .. a*m + m - 1 with m = field_rank(field), in the order
/// (x, y) for C, (t, x, y, z) for H and x_0 .. x_7 for O.
///
/// From the real Hessian H of f:
///   C:      h_ab = 1/4 sum_{al,be} H[a al, b be] conj(e_al) e_be
///   H, O:   h_ab =     sum_{al,be} H[a al, b be] e_al conj(e_be)
/// For R the real Hessian is returned unchanged.
HermitianMatrix assemble_structured(Field field, const Eigen::MatrixXd& real_hessian);

/// assemble_structured of the finite-difference real Hessian.
HermitianMatrix structured_hessian(Field field, const ScalarField& f, const Eigen::VectorXd& x);

}  // namespace mav
