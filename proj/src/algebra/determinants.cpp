#include "mavals/algebra/determinants.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mavals/algebra/jacobi.hpp"
#include "mavals/error.hpp"

namespace mav {

namespace {

// Column b holds the coefficients of q * e_b.
Eigen::Matrix4d left_mult(const Quaternion& q) {
  Eigen::Matrix4d m;
  const Quaternion basis[4] = {Quaternion(1.0), Quaternion::i(), Quaternion::j(), Quaternion::k()};
  for (int b = 0; b < 4; ++b) {
    const Quaternion p = q * basis[b];
    m.col(b) << p.t, p.x, p.y, p.z;
  }
  return m;
}

}  // namespace

Eigen::MatrixXd realize_quat_matrix(const QuaternionMatrix& a) {
  Eigen::MatrixXd r(4 * a.rows(), 4 * a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r.block<4, 4>(4 * i, 4 * j) = left_mult(a(i, j));
  return r;
}

double moore_det(const HermitianMatrix& a_in) {
  if (a_in.field() == Field::O2) throw DimensionError("moore_det: octonionic input");
  const HermitianMatrix a = promote(a_in, Field::H);
  const int n = a.size();
  const Eigen::MatrixXd r = realize_quat_matrix(a.to_quaternion());
  const Eigen::VectorXd ev = jacobi_eigenvalues(r);

  const double scale = std::max(1.0, a.norm());
  double p = 1.0;
  for (int g = 0; g < n; ++g) {
    const double lo = ev(4 * g), hi = ev(4 * g + 3);
    if (hi - lo > 1e-7 * scale)
      throw NumericalError("moore_det: eigenvalue group " + std::to_string(g) + " not resolved (spread " +
                           std::to_string(hi - lo) + ")");
    p *= 0.25 * (ev(4 * g) + ev(4 * g + 1) + ev(4 * g + 2) + ev(4 * g + 3));
  }

  const double d = r.partialPivLu().determinant();
  const double tol = 1e-8 * std::max(1.0, std::pow(a.norm(), 4.0 * n));
  if (!(std::abs(d - p * p * p * p) <= tol))
    throw NumericalError("moore_det: realization determinant mismatch");
  return p;
}

double oct_det2(const HermitianMatrix& a) {
  if (a.size() != 2) throw DimensionError("oct_det2: matrix must be 2x2");
  return a(0, 0).real() * a(1, 1).real() - a(0, 1).norm2();
}

double det(const HermitianMatrix& a) {
  switch (a.field()) {
    case Field::R:
      return a.to_real().determinant();
    case Field::C:
      return a.to_complex().determinant().real();
    case Field::H:
      if (a.size() == 1) return a(0, 0).real();
      return moore_det(a);
    case Field::O2:
      return oct_det2(a);
  }
  return 0.0;
}

HermitianMatrix promote(const HermitianMatrix& a, Field to) {
  if (a.field() == to) return a;
  if (field_rank(to) < field_rank(a.field())) throw DimensionError("promote: target field is smaller");
  HermitianMatrix out(to, a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = i; j < a.size(); ++j) out.set(i, j, a(i, j));
  return out;
}

}  // namespace mav
