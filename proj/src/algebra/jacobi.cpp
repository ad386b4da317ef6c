#include "mavals/algebra/jacobi.hpp"

#include <algorithm>
#include <cmath>

#include "mavals/error.hpp"

namespace mav {

Eigen::VectorXd jacobi_eigenvalues(const Eigen::MatrixXd& a_in, int max_sweeps) {
  if (a_in.rows() != a_in.cols()) throw DimensionError("jacobi: matrix not square");
  const Eigen::Index n = a_in.rows();
  Eigen::MatrixXd a = 0.5 * (a_in + a_in.transpose());

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0, diag = 0;
    for (Eigen::Index p = 0; p < n; ++p) {
      diag += a(p, p) * a(p, p);
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    }
    if (off <= 1e-32 * std::max(diag, 1e-300)) break;

    for (Eigen::Index p = 0; p < n - 1; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    if (sweep == max_sweeps - 1) throw NumericalError("jacobi: no convergence");
  }

  Eigen::VectorXd ev = a.diagonal();
  std::sort(ev.data(), ev.data() + n);
  return ev;
}

}  // namespace mav
