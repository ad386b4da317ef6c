#pragma once

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "mavals/algebra/hermitian.hpp"

namespace mav {

/// The symmetric n-linear form whose diagonal is the field's determinant.
struct MixedDetForm {
  Field field = Field::R;
  int n = 1;
};

/// Polarization:
///   D(x_1..x_n) = (1/n!) sum_{S nonempty} (-1)^{n-|S|} det(sum_{i in S} x_i).
/// Throws DimensionError on arity, field or size mismatch.
double mixed_det(const MixedDetForm& form, std::span<const HermitianMatrix> args);

/// Real symmetric shortcut, same formula.
double mixed_det(std::span<const Eigen::MatrixXd> args);

/// D(H, .., H, A_1, .., A_{n-i}) with H repeated i times. Falls back to det(H)
/// when i == n.
double mixed_det_repeated(const HermitianMatrix& h, int i, std::span<const HermitianMatrix> rest);

}  // namespace mav
