#include "mavals/verify/report.hpp"

#include <cmath>

namespace mav {

void ExperimentReport::check(std::string label, double obs, double exp, double tol) {
  labels.push_back(std::move(label));
  observed.push_back(obs);
  expected.push_back(exp);
  tolerance.push_back(tol);
}

void ExperimentReport::check_flag(std::string label, bool obs, bool exp) {
  check(std::move(label), obs ? 1.0 : 0.0, exp ? 1.0 : 0.0, 0.0);
}

bool ExperimentReport::evaluate() {
  pass = !observed.empty();
  for (size_t k = 0; k < observed.size(); ++k)
    if (!(std::abs(observed[k] - expected[k]) <= tolerance[k])) pass = false;
  return pass;
}

namespace {

// JSON has no NaN or infinity; encode them as strings.
nlohmann::ordered_json num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return v;
}

nlohmann::ordered_json nums(const std::vector<double>& v) {
  auto arr = nlohmann::ordered_json::array();
  for (double x : v) arr.push_back(num(x));
  return arr;
}

}  // namespace

nlohmann::ordered_json ExperimentReport::to_json(bool timing) const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["anchor"] = anchor;
  j["parameters"] = parameters;
  j["labels"] = labels;
  j["observed"] = nums(observed);
  j["expected"] = nums(expected);
  j["tolerance"] = nums(tolerance);
  j["pass"] = pass;
  if (timing) j["runtime"] = runtime;
  if (!details.empty()) j["details"] = details;
  return j;
}

nlohmann::ordered_json summary_index(const std::vector<ExperimentReport>& reports) {
  nlohmann::ordered_json j;
  auto list = nlohmann::ordered_json::array();
  int passed = 0;
  for (const auto& r : reports) {
    list.push_back({{"name", r.name}, {"pass", r.pass}});
    passed += r.pass ? 1 : 0;
  }
  j["experiments"] = list;
  j["passed"] = passed;
  j["failed"] = static_cast<int>(reports.size()) - passed;
  return j;
}

}  // namespace mav
