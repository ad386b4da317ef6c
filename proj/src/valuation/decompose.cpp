#include "mavals/valuation/decompose.hpp"

#include "mavals/error.hpp"

namespace mav {

std::vector<double> homogeneous_components(const BodyValuation& phi, const ConvexBody& k, int max_degree) {
  if (max_degree < 0) throw Error("homogeneous_components: negative degree");
  const int m = max_degree + 1;
  Eigen::MatrixXd v(m, m);
  Eigen::VectorXd rhs(m);
  for (int j = 0; j < m; ++j) {
    const double lam = j + 1.0;
    for (int p = 0; p < m; ++p) v(j, p) = std::pow(lam, p);
    rhs(j) = phi(k.scaled(lam));
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(v);
  const auto& s = svd.singularValues();
  const double cond = s(0) / s(m - 1);
  if (!(cond <= 1e12)) throw NumericalError("homogeneous_components: Vandermonde system ill-conditioned");
  const Eigen::VectorXd c = v.fullPivLu().solve(rhs);
  return {c.data(), c.data() + m};
}

std::vector<double> homogeneous_components(const ValuationSpec& spec, const ConvexBody& k, const QuadratureGrid& grid,
                                           int max_degree, int threads) {
  return homogeneous_components([&](const ConvexBody& b) { return body_valuation(spec, b, grid, threads); }, k,
                                max_degree);
}

ParityParts parity_split(const BodyValuation& phi, const ConvexBody& k) {
  ParityParts p;
  p.value = phi(k);
  p.reflected = phi(k.negated());
  p.even = 0.5 * (p.value + p.reflected);
  p.odd = 0.5 * (p.value - p.reflected);
  return p;
}

ParityParts parity_split(const ValuationSpec& spec, const ConvexBody& k, const QuadratureGrid& grid, int threads) {
  return parity_split([&](const ConvexBody& b) { return body_valuation(spec, b, grid, threads); }, k);
}

}  // namespace mav
