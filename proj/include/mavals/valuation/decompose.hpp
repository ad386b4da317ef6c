#pragma once

#include <functional>
#include <vector>

#include "mavals/convex/body.hpp"
#include "mavals/valuation/evaluate.hpp"

namespace mav {

using BodyValuation = std::function<double(const ConvexBody&)>;

/// c_0..c_max with phi(lambda K) = sum c_j lambda^j, from lambda = 1..max+1.
/// Throws NumericalError if the Vandermonde condition number exceeds 1e12.
std::vector<double> homogeneous_components(const BodyValuation& phi, const ConvexBody& k, int max_degree);
std::vector<double> homogeneous_components(const ValuationSpec& spec, const ConvexBody& k, const QuadratureGrid& grid,
                                           int max_degree, int threads = 1);

struct ParityParts {
  double even = 0, odd = 0;
  double value = 0, reflected = 0;  // phi(K), phi(-K)
};

/// even = (phi(K) + phi(-K)) / 2, odd = (phi(K) - phi(-K)) / 2.
ParityParts parity_split(const BodyValuation& phi, const ConvexBody& k);
ParityParts parity_split(const ValuationSpec& spec, const ConvexBody& k, const QuadratureGrid& grid, int threads = 1);

}  // namespace mav
