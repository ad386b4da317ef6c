#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mavals/algebra/hermitian.hpp"
#include "mavals/verify/report.hpp"

namespace mav {

/// Knobs shared by all experiments; unset values fall back to each
/// experiment's defaults. threads never changes a result.
struct ExperimentOptions {
  std::uint64_t seed = 1;
  int threads = 1;
  std::optional<int> dim, degree, cells, trials;
  std::optional<Field> field;
  std::optional<double> sigma, fd_step;
  std::vector<double> sigmas;
  std::optional<std::string> body;
};

ExperimentReport run_mixed_det_identity(const ExperimentOptions& opt);
ExperimentReport run_moore_determinant(const ExperimentOptions& opt);
ExperimentReport run_structured_hessians(const ExperimentOptions& opt);

ExperimentReport run_step6_parity(const ExperimentOptions& opt);
ExperimentReport run_volume_lemma(const ExperimentOptions& opt);
ExperimentReport run_homogeneity(const ExperimentOptions& opt);
ExperimentReport run_continuity(const ExperimentOptions& opt);

ExperimentReport run_valuation_identity(const ExperimentOptions& opt);
ExperimentReport run_linear_invariance(const ExperimentOptions& opt);
ExperimentReport run_kernel_laplacian(const ExperimentOptions& opt);

}  // namespace mav
