#pragma once

#include <cmath>

#include "mavals/valuation/spec.hpp"

namespace mav::detail {

inline ScalarWeight make_weight(Profile p, const Eigen::VectorXd& center, double radius, double inner = 0.5) {
  ScalarWeight w;
  w.profile = p;
  w.center = center;
  w.radius = radius;
  w.inner = inner;
  return w;
}

inline MatrixWeight field_weight(HermitianMatrix m, ScalarWeight profile) {
  MatrixWeight w;
  w.matrix = std::move(m);
  w.profile = std::move(profile);
  return w;
}

inline MatrixWeight atom_weight(HermitianMatrix m, const Eigen::VectorXd& location, double width = 0.0) {
  MatrixWeight w;
  w.matrix = std::move(m);
  w.atom = true;
  w.location = location;
  w.width = width;
  return w;
}

inline double binomial(int n, int k) {
  double b = 1;
  for (int j = 1; j <= k; ++j) b = b * (n - k + j) / j;
  return b;
}

/// i! / n!
inline double factorial_ratio(int i, int n) {
  double r = 1;
  for (int k = i + 1; k <= n; ++k) r /= k;
  return r;
}

inline double rel_gap(double obs, double exp) { return std::abs(obs - exp) / std::max(1e-300, std::abs(exp)); }

}  // namespace mav::detail
