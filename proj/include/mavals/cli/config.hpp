#pragma once

#include <string>

#include <json.hpp>

#include "mavals/verify/experiments.hpp"

namespace mav {

struct RunConfig {
  std::string experiment;  // a registered name or "all"
  ExperimentOptions options;
  std::string output_dir;  // empty: MAVALS_OUTPUT_DIR, then "reports"
  bool timing = false;
};

/// Keys: experiment, dim, degree, field, cells, sigma, sigmas, fd_step, trials,
/// body, seed, threads, output, timing. Unknown keys are rejected.
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const RunConfig& c);
/// Throws ConfigError with a diagnostic; runs no computation.
void validate(const RunConfig& c);
/// Explicit output_dir, else MAVALS_OUTPUT_DIR, else "reports".
std::string resolve_output_dir(const RunConfig& c);

}  // namespace mav
