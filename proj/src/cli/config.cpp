#include "mavals/cli/config.hpp"

#include <cstdlib>
#include <set>

#include "mavals/error.hpp"
#include "mavals/verify/registry.hpp"

namespace mav {

RunConfig config_from_json(const nlohmann::json& j) {
  static const std::set<std::string> keys{"experiment", "dim",  "degree", "field",   "cells",  "sigma", "sigmas",
                                          "fd_step",    "trials", "body", "seed", "threads", "output", "timing"};
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [k, v] : j.items())
    if (!keys.count(k)) throw ConfigError("unknown config key '" + k + "'");
  RunConfig c;
  auto& o = c.options;
  try {
    if (j.contains("experiment")) c.experiment = j.at("experiment").get<std::string>();
    if (j.contains("dim")) o.dim = j.at("dim").get<int>();
    if (j.contains("degree")) o.degree = j.at("degree").get<int>();
    if (j.contains("field")) o.field = parse_field(j.at("field").get<std::string>());
    if (j.contains("cells")) o.cells = j.at("cells").get<int>();
    if (j.contains("sigma")) o.sigma = j.at("sigma").get<double>();
    if (j.contains("sigmas")) o.sigmas = j.at("sigmas").get<std::vector<double>>();
    if (j.contains("fd_step")) o.fd_step = j.at("fd_step").get<double>();
    if (j.contains("trials")) o.trials = j.at("trials").get<int>();
    if (j.contains("body")) o.body = j.at("body").get<std::string>();
    if (j.contains("seed")) o.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("threads")) o.threads = j.at("threads").get<int>();
    if (j.contains("output")) c.output_dir = j.at("output").get<std::string>();
    if (j.contains("timing")) c.timing = j.at("timing").get<bool>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return c;
}

nlohmann::ordered_json to_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  const auto& o = c.options;
  j["experiment"] = c.experiment;
  if (o.dim) j["dim"] = *o.dim;
  if (o.degree) j["degree"] = *o.degree;
  if (o.field) j["field"] = std::string(field_name(*o.field));
  if (o.cells) j["cells"] = *o.cells;
  if (o.sigma) j["sigma"] = *o.sigma;
  if (!o.sigmas.empty()) j["sigmas"] = o.sigmas;
  if (o.fd_step) j["fd_step"] = *o.fd_step;
  if (o.trials) j["trials"] = *o.trials;
  if (o.body) j["body"] = *o.body;
  j["seed"] = o.seed;
  j["threads"] = o.threads;
  if (!c.output_dir.empty()) j["output"] = c.output_dir;
  j["timing"] = c.timing;
  return j;
}

void validate(const RunConfig& c) {
  if (c.experiment.empty()) throw ConfigError("no experiment given");
  if (c.experiment != "all" && !find_experiment(c.experiment))
    throw ConfigError("unknown experiment '" + c.experiment + "' (see list)");
  const auto& o = c.options;
  if (o.threads < 1) throw ConfigError("threads must be positive");
  if (o.dim && *o.dim < 1) throw ConfigError("dimension must be positive");
  if (o.cells && *o.cells < 1) throw ConfigError("cells must be positive");
  if (o.trials && *o.trials < 1) throw ConfigError("trials must be positive");
  if (o.sigma && !(*o.sigma > 0)) throw ConfigError("sigma must be positive");
  if (o.fd_step && !(*o.fd_step > 0)) throw ConfigError("fd step must be positive");
  for (double s : o.sigmas)
    if (!(s > 0)) throw ConfigError("smoothing widths must be positive");

  const std::string& e = c.experiment;
  if (o.degree && (e == "step6-parity" || e == "homogeneity")) {
    const int n = o.dim.value_or(3);
    const int lo = e == "step6-parity" ? 1 : 0;
    if (*o.degree < lo || *o.degree > n - 1)
      throw ConfigError("degree out of range " + std::to_string(lo) + "..n-1 (n = " + std::to_string(n) + ")");
  }
  if (o.dim && (e == "step6-parity" || e == "homogeneity") && *o.dim < 2)
    throw ConfigError("dimension must be at least 2");
  if (o.dim && e != "all" && e != "step6-parity" && e != "homogeneity")
    throw ConfigError("experiment '" + e + "' has a fixed dimension");
}

std::string resolve_output_dir(const RunConfig& c) {
  if (!c.output_dir.empty()) return c.output_dir;
  if (const char* env = std::getenv("MAVALS_OUTPUT_DIR"); env && *env) return env;
  return "reports";
}

}  // namespace mav
