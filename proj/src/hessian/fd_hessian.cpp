#include "mavals/hessian/fd_hessian.hpp"

#include <cmath>

#include "mavals/error.hpp"

namespace mav {

Eigen::MatrixXd fd_hessian_matrix(const ScalarField& field, const Eigen::VectorXd& x) {
  const int d = field.dim;
  if (x.size() != d) throw DimensionError("fd_hessian: point has wrong dimension");
  const double h = field.step > 0 ? field.step : 1e-4 * (1.0 + x.norm());

  auto eval = [&](const Eigen::VectorXd& p) {
    const double v = field.f(p);
    if (!std::isfinite(v)) throw NumericalError("fd_hessian: non-finite function value in stencil");
    return v;
  };

  Eigen::MatrixXd hess(d, d);
  const double f0 = eval(x);
  Eigen::VectorXd p = x;
  for (int i = 0; i < d; ++i) {
    p(i) = x(i) + h;
    const double fp = eval(p);
    p(i) = x(i) - h;
    const double fm = eval(p);
    p(i) = x(i);
    hess(i, i) = (fp - 2.0 * f0 + fm) / (h * h);
  }
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      double acc = 0;
      for (int si = -1; si <= 1; si += 2)
        for (int sj = -1; sj <= 1; sj += 2) {
          p(i) = x(i) + si * h;
          p(j) = x(j) + sj * h;
          acc += si * sj * eval(p);
        }
      p(i) = x(i);
      p(j) = x(j);
      hess(i, j) = hess(j, i) = acc / (4.0 * h * h);
    }
  return hess;
}

HermitianMatrix fd_hessian(const ScalarField& f, const Eigen::VectorXd& x) {
  return HermitianMatrix::from_real(fd_hessian_matrix(f, x));
}

}  // namespace mav
