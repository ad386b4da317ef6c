#include "mavals/verify/registry.hpp"

#include <chrono>

#include "mavals/error.hpp"

namespace mav {

const std::vector<ExperimentInfo>& experiment_registry() {
  static const std::vector<ExperimentInfo> list{
      {"mixed-det-identity", "mixed determinant with coordinate matrices equals a scaled principal minor",
       "random symmetric H, n = 3..6", run_mixed_det_identity},
      {"moore-determinant", "Moore determinant of quaternionic Hermitian matrices",
       "2x2 closed form, identity, complex agreement, realization, weak multiplicativity", run_moore_determinant},
      {"structured-hessians", "complex, quaternionic and octonionic Hessians of the squared norm",
       "symbolic values and finite-difference cross-checks", run_structured_hessians},
      {"step6-parity", "two-ball body witness of a valuation neither even nor odd",
       "atom weights, bump approximation, ball control", run_step6_parity},
      {"volume-lemma", "Monge-Ampere measure of a support function is vol(K) times delta_0",
       "PL atom route and smoothed quadrature on random polytopes", run_volume_lemma},
      {"homogeneity", "homogeneous decomposition of valuations in the scaling parameter",
       "Vandermonde components of degree-i specs and of the volume", run_homogeneity},
      {"continuity", "weak continuity of Monge-Ampere measures under uniform convergence",
       "Gaussian smoothing of the cube support function with shrinking width", run_continuity},
      {"valuation-identity", "Phi(max(f,g)) + Phi(min(f,g)) = Phi(f) + Phi(g) for union-convex pairs",
       "R^3, C^2, H^1, O^2 with a non-additive control", run_valuation_identity},
      {"linear-invariance", "Phi(f + l) = Phi(f) for linear functionals l",
       "all fields with a point-evaluation control", run_linear_invariance},
      {"kernel-laplacian", "first-order expansion of det(I + eps Hess psi) and kernel elements vanishing at 0",
       "epsilon halving, T-image of bumps with B(0) = 0", run_kernel_laplacian},
  };
  return list;
}

const ExperimentInfo* find_experiment(const std::string& name) {
  for (const auto& e : experiment_registry())
    if (e.name == name) return &e;
  return nullptr;
}

ExperimentReport run_experiment(const std::string& name, const ExperimentOptions& opt) {
  const ExperimentInfo* info = find_experiment(name);
  if (!info) throw ConfigError("unknown experiment '" + name + "'");
  if (opt.threads < 1) throw ConfigError("threads must be positive");
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentReport r = info->run(opt);
  r.runtime = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.name = info->name;
  r.anchor = info->anchor;
  r.evaluate();
  return r;
}

}  // namespace mav
