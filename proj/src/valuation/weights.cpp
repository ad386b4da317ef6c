#include "mavals/valuation/weights.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

#include "mavals/error.hpp"

namespace mav {

namespace {

double bump_shape(double r) { return r < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - r * r)) : 0.0; }

// integral of bump_shape(|y|) over the unit ball of R^d
double bump_mass(int d) {
  static std::mutex mu;
  static std::map<int, double> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(d); it != cache.end()) return it->second;
  const int steps = 4000;
  double s = 0;
  for (int k = 0; k <= steps; ++k) {
    const double r = static_cast<double>(k) / steps;
    const double w = (k == 0 || k == steps) ? 1.0 : (k % 2 ? 4.0 : 2.0);
    s += w * bump_shape(r) * std::pow(r, d - 1);
  }
  s /= 3.0 * steps;
  const double sphere = 2.0 * std::pow(std::numbers::pi, 0.5 * d) / std::tgamma(0.5 * d);
  return cache[d] = s * sphere;
}

double smooth_step(double t) {
  auto f = [](double u) { return u > 0 ? std::exp(-1.0 / u) : 0.0; };
  return f(t) / (f(t) + f(1.0 - t));
}

}  // namespace

std::string_view profile_name(Profile p) {
  switch (p) {
    case Profile::Bump: return "bump";
    case Profile::NormalizedBump: return "normalized_bump";
    case Profile::Plateau: return "plateau";
    case Profile::Constant: return "constant";
  }
  return "?";
}

Profile parse_profile(std::string_view name) {
  if (name == "bump") return Profile::Bump;
  if (name == "normalized_bump") return Profile::NormalizedBump;
  if (name == "plateau") return Profile::Plateau;
  if (name == "constant") return Profile::Constant;
  throw ConfigError("unknown weight profile '" + std::string(name) + "'");
}

double ScalarWeight::operator()(const Eigen::VectorXd& x) const {
  if (profile == Profile::Constant) return amplitude;
  const double r = (x - center).norm() / radius;
  switch (profile) {
    case Profile::Bump:
      return amplitude * bump_shape(r);
    case Profile::NormalizedBump:
      return r < 1.0 ? amplitude * bump_shape(r) / (bump_mass(dim()) * std::pow(radius, dim())) : 0.0;
    case Profile::Plateau:
      if (r <= inner) return amplitude;
      if (r >= 1.0) return 0.0;
      return amplitude * (1.0 - smooth_step((r - inner) / (1.0 - inner)));
    case Profile::Constant:
      break;
  }
  return amplitude;
}

ScalarWeight MatrixWeight::scalar_factor() const {
  if (!atom) return profile;
  if (width <= 0) throw Error("exact point atom has no continuous factor");
  ScalarWeight w;
  w.profile = Profile::NormalizedBump;
  w.center = location;
  w.radius = width;
  return w;
}

}  // namespace mav
