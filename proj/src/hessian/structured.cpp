#include "mavals/hessian/structured.hpp"

#include <string>

#include "mavals/error.hpp"

namespace mav {

HermitianMatrix assemble_structured(Field field, const Eigen::MatrixXd& hr) {
  if (hr.rows() != hr.cols()) throw DimensionError("assemble_structured: Hessian not square");
  const int m = field_rank(field);
  const int d = static_cast<int>(hr.rows());
  if (d % m != 0)
    throw DimensionError("assemble_structured: dimension " + std::to_string(d) + " not divisible by " +
                         std::to_string(m));
  const int n = d / m;
  if (field == Field::R) return HermitianMatrix::from_real(hr);

  HermitianMatrix out(field, n);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Octonion s;
      for (int al = 0; al < m; ++al)
        for (int be = 0; be < m; ++be) {
          const double w = 0.5 * (hr(a * m + al, b * m + be) + hr(b * m + be, a * m + al));
          if (w == 0.0) continue;
          const Octonion ea = Octonion::unit(al), eb = Octonion::unit(be);
          const Octonion prod = field == Field::C ? ea.conj() * eb : ea * eb.conj();
          s += w * prod;
        }
      if (field == Field::C) s *= 0.25;
      out.set(a, b, s);
    }
  return out;
}

HermitianMatrix structured_hessian(Field field, const ScalarField& f, const Eigen::VectorXd& x) {
  return assemble_structured(field, fd_hessian_matrix(f, x));
}

}  // namespace mav
