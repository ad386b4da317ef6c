#pragma once

#include <vector>

#include <Eigen/Dense>

#include "mavals/convex/body.hpp"
#include "mavals/valuation/function.hpp"
#include "mavals/valuation/spec.hpp"

namespace mav {

/// Midpoint rule on a box: cell k along axis a has center lo(a) + (k + 1/2) h(a),
/// h = (hi - lo) / cells. sigma is the Gaussian smoothing width for
/// non-smooth inputs; 0 selects 3 cells.
struct QuadratureGrid {
  Eigen::VectorXd lo, hi;
  std::vector<int> cells;
  double sigma = 0.0;

  static QuadratureGrid cube(int dim, double half_width, int cells_per_axis, double sigma = 0.0);

  int dim() const { return static_cast<int>(lo.size()); }
  Eigen::VectorXd cell_size() const;
  double cell_volume() const;
  long cell_count() const;
  /// sigma, or its default; throws ConfigError if it is below one cell.
  double effective_sigma() const;
  void validate() const;
};

/// Weighted point set replacing the quadrature grid: Phi ~ sum_k w_k * integrand(x_k).
/// Non-smooth inputs need a closed-form smoothed Hessian at width sigma.
struct ProbeSet {
  Points points;
  std::vector<double> weights;
  double sigma = 0.0;
};

/// Phi(f). An exact point atom is evaluated at its location; otherwise the
/// integrand is summed over the cells whose centers lie in the weight support.
/// Cell contributions are computed in parallel and added in index order, so
/// the result does not depend on `threads`.
double eval_valuation(const ValuationSpec& spec, const Function& f, const QuadratureGrid& grid, int threads = 1);
double eval_valuation(const ValuationSpec& spec, const Function& f, const ProbeSet& probes, int threads = 1);

/// Phi(h_K). Throws Error if the weight support contains the origin and no
/// smoothing is available (smooth bodies with grid.sigma == 0).
double body_valuation(const ValuationSpec& spec, const ConvexBody& k, const QuadratureGrid& grid, int threads = 1);

}  // namespace mav
