#include "mavals/valuation/spec.hpp"

#include <limits>
#include <string>

#include "mavals/error.hpp"

namespace mav {

void ValuationSpec::validate() const {
  if (n < 1) throw ConfigError("matrix size must be positive");
  if (field == Field::O2 && n != 2) throw ConfigError("octonionic valuations need n = 2");
  if (degree < 0 || degree > n) throw ConfigError("degree out of range 0.." + std::to_string(n));
  if (field == Field::O2 && degree < 1) throw ConfigError("octonionic valuations need degree 1 or 2");
  if (static_cast<int>(a.size()) != n - degree)
    throw ConfigError("expected " + std::to_string(n - degree) + " matrix weights, got " + std::to_string(a.size()));
  const int d = real_dim();
  if (b.dim() != d) throw ConfigError("scalar weight center has dimension " + std::to_string(b.dim()) +
                                      ", expected " + std::to_string(d));
  if (b.radius <= 0) throw ConfigError("scalar weight radius must be positive");
  int atoms = 0;
  for (const auto& w : a) {
    if (w.matrix.field() != field || w.matrix.size() != n)
      throw ConfigError("matrix weight does not match field and size");
    if (w.atom) {
      ++atoms;
      if (w.location.size() != d) throw ConfigError("atom location has wrong dimension");
      if (w.width < 0) throw ConfigError("atom width must be non-negative");
    } else {
      if (w.profile.dim() != d) throw ConfigError("matrix weight center has wrong dimension");
      if (w.profile.radius <= 0) throw ConfigError("matrix weight radius must be positive");
    }
  }
  if (atoms > 1) throw ConfigError("at most one point atom is supported");
  if (!b.compact() && atoms == 0) {
    bool bounded = false;
    for (const auto& w : a) bounded = bounded || (!w.atom && w.profile.compact());
    if (!bounded) throw ConfigError("constant scalar weight needs a compactly supported matrix weight or an atom");
  }
}

int ValuationSpec::atom_index() const {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k].exact_atom()) return static_cast<int>(k);
  return -1;
}

std::pair<Eigen::VectorXd, Eigen::VectorXd> ValuationSpec::support_box() const {
  const int d = real_dim();
  Eigen::VectorXd lo = Eigen::VectorXd::Constant(d, -std::numeric_limits<double>::infinity());
  Eigen::VectorXd hi = -lo;
  auto clamp_to = [&](const ScalarWeight& w) {
    if (!w.compact()) return;
    lo = lo.cwiseMax((w.center.array() - w.radius).matrix());
    hi = hi.cwiseMin((w.center.array() + w.radius).matrix());
  };
  clamp_to(b);
  for (const auto& w : a) {
    if (w.exact_atom()) {
      lo = lo.cwiseMax(w.location);
      hi = hi.cwiseMin(w.location);
    } else {
      clamp_to(w.scalar_factor());
    }
  }
  return {lo, hi};
}

}  // namespace mav
