#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace mav {

/// One named experiment: observed values against expected values, each with
/// its own absolute tolerance. pass holds iff every |observed - expected| <=
/// tolerance (NaN never passes).
struct ExperimentReport {
  std::string name;
  std::string anchor;
  nlohmann::ordered_json parameters = nlohmann::ordered_json::object();
  std::vector<std::string> labels;
  std::vector<double> observed, expected, tolerance;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
  bool pass = false;
  double runtime = 0.0;  // seconds

  void check(std::string label, double obs, double exp, double tol);
  /// Records a boolean outcome as 1/0 against the expected flag.
  void check_flag(std::string label, bool obs, bool exp);
  bool evaluate();

  /// Runtime is included only when `timing` is set, so reports of identical
  /// runs are byte-identical.
  nlohmann::ordered_json to_json(bool timing = false) const;
};

/// {"experiments": [{"name", "pass"}..], "passed": p, "failed": f}
nlohmann::ordered_json summary_index(const std::vector<ExperimentReport>& reports);

}  // namespace mav
