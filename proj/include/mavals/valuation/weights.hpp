#pragma once

#include <string_view>

#include <Eigen/Dense>

#include "mavals/algebra/hermitian.hpp"

namespace mav {

enum class Profile {
  Bump,            // exp(1 - 1/(1 - r^2)), value 1 at the center
  NormalizedBump,  // same shape, total integral 1
  Plateau,         // 1 for r <= inner, smooth C-infinity drop to 0 at r = 1
  Constant,        // 1 everywhere; only valid together with a point atom
};

std::string_view profile_name(Profile p);
Profile parse_profile(std::string_view name);

/// amplitude * profile(|x - center| / radius).
struct ScalarWeight {
  Profile profile = Profile::Bump;
  Eigen::VectorXd center;
  double radius = 1.0;
  double inner = 0.5;  // plateau only, as a fraction of radius
  double amplitude = 1.0;

  double operator()(const Eigen::VectorXd& x) const;
  bool compact() const { return profile != Profile::Constant; }
  int dim() const { return static_cast<int>(center.size()); }
};

/// A matrix-valued weight: matrix * profile(x), or matrix * delta_location.
/// A point atom with width > 0 is approximated by matrix * (normalized bump
/// of that radius) instead of being evaluated at the point.
struct MatrixWeight {
  HermitianMatrix matrix;
  bool atom = false;
  Eigen::VectorXd location;  // atom only
  double width = 0.0;        // atom only
  ScalarWeight profile;      // continuous field only

  bool exact_atom() const { return atom && width == 0.0; }
  /// The continuous scalar factor (the normalized bump for an approximated atom).
  ScalarWeight scalar_factor() const;
};

}  // namespace mav
