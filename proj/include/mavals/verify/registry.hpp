#pragma once

#include <string>
#include <vector>

#include "mavals/verify/experiments.hpp"

namespace mav {

struct ExperimentInfo {
  std::string name;
  std::string anchor;
  std::string summary;
  ExperimentReport (*run)(const ExperimentOptions&);
};

const std::vector<ExperimentInfo>& experiment_registry();
/// nullptr if unknown.
const ExperimentInfo* find_experiment(const std::string& name);

/// Runs the experiment, fills in name, anchor and runtime, and evaluates pass.
/// Throws ConfigError for unknown names or invalid options.
ExperimentReport run_experiment(const std::string& name, const ExperimentOptions& opt);

}  // namespace mav
