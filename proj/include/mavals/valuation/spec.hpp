#pragma once

#include <vector>

#include <Eigen/Dense>

#include "mavals/algebra/hermitian.hpp"
#include "mavals/valuation/weights.hpp"

namespace mav {

/// Phi(f) = int B(x) D(Hess_F f(x) [degree times], A_1(x), .., A_{n-degree}(x)) dx
/// over R^{real_dim()}, D the mixed determinant of the field F.
struct ValuationSpec {
  Field field = Field::R;
  int n = 1;       // matrix size
  int degree = 1;  // number of Hessian slots
  ScalarWeight b;
  std::vector<MatrixWeight> a;

  int real_dim() const { return n * field_rank(field); }

  /// Throws ConfigError describing the first violated condition.
  void validate() const;

  /// Index of the exact point atom, or -1.
  int atom_index() const;

  /// Bounding box of supp B intersected with the supports of the continuous
  /// matrix weights (and the approximated atom). lo > hi in some coordinate
  /// means the support is empty.
  std::pair<Eigen::VectorXd, Eigen::VectorXd> support_box() const;
};

}  // namespace mav
