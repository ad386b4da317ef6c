#include "mavals/valuation/function.hpp"

#include <algorithm>

#include "mavals/error.hpp"
#include "mavals/hessian/fd_hessian.hpp"

namespace mav {

Eigen::MatrixXd Function::hessian_at(const Eigen::VectorXd& x) const {
  if (hessian) return hessian(x);
  return fd_hessian_matrix(ScalarField{dim, value, fd_step}, x);
}

Function Function::plus_affine(const Eigen::VectorXd& l, double c) const {
  if (l.size() != dim) throw DimensionError("plus_affine: linear term has wrong dimension");
  Function out = *this;
  out.value = [f = value, l, c](const Eigen::VectorXd& x) { return f(x) + l.dot(x) + c; };
  out.label = label + "+affine";
  return out;
}

Function Function::smooth(int dim, std::function<double(const Eigen::VectorXd&)> f,
                          std::function<Eigen::MatrixXd(const Eigen::VectorXd&)> hess, std::string label) {
  Function out;
  out.dim = dim;
  out.value = std::move(f);
  out.hessian = std::move(hess);
  out.label = std::move(label);
  return out;
}

Function Function::from_body(const ConvexBody& k) {
  Function out;
  out.dim = k.dim();
  out.value = [k](const Eigen::VectorXd& x) { return k.support(x); };
  out.regularity = k.is_smooth_off_origin() ? Regularity::SmoothOffOrigin : Regularity::Nonsmooth;
  out.label = "h[" + k.describe() + "]";
  return out;
}

Function Function::from_pl(const PLConvexFunction& f) {
  Function out;
  out.dim = f.dim();
  out.value = [f](const Eigen::VectorXd& x) { return f(x); };
  out.regularity = f.pieces().size() == 1 ? Regularity::Smooth : Regularity::Nonsmooth;
  out.label = "pl[" + std::to_string(f.pieces().size()) + "]";
  return out;
}

Function Function::max_of(const Function& f, const Function& g) {
  if (f.dim != g.dim) throw DimensionError("max_of: dimension mismatch");
  Function out;
  out.dim = f.dim;
  out.value = [a = f.value, b = g.value](const Eigen::VectorXd& x) { return std::max(a(x), b(x)); };
  out.regularity = Regularity::Nonsmooth;
  out.label = "max(" + f.label + "," + g.label + ")";
  return out;
}

Function Function::min_of(const Function& f, const Function& g) {
  if (f.dim != g.dim) throw DimensionError("min_of: dimension mismatch");
  Function out;
  out.dim = f.dim;
  out.value = [a = f.value, b = g.value](const Eigen::VectorXd& x) { return std::min(a(x), b(x)); };
  out.regularity = Regularity::Nonsmooth;
  out.label = "min(" + f.label + "," + g.label + ")";
  return out;
}

}  // namespace mav
