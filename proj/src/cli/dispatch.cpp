#include "mavals/cli/dispatch.hpp"

#include <fstream>
#include <ostream>
#include <unistd.h>

#include "mavals/error.hpp"
#include "mavals/verify/registry.hpp"

namespace mav {

namespace fs = std::filesystem;

void write_atomically(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw Error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

int dispatch(const RunConfig& config, std::ostream& log, std::ostream& err) {
  try {
    validate(config);
  } catch (const ConfigError& e) {
    err << "invalid config: " << e.what() << "\n";
    return 2;
  }
  std::vector<std::string> names;
  if (config.experiment == "all") {
    for (const auto& e : experiment_registry()) names.push_back(e.name);
  } else {
    names.push_back(config.experiment);
  }

  const fs::path out = resolve_output_dir(config);
  std::vector<ExperimentReport> reports;
  for (const auto& name : names) {
    ExperimentReport r;
    try {
      r = run_experiment(name, config.options);
    } catch (const ConfigError& e) {
      err << "invalid config: " << e.what() << "\n";
      return 2;
    } catch (const std::exception& e) {
      r.name = name;
      r.anchor = find_experiment(name)->anchor;
      r.pass = false;
      r.details["error"] = e.what();
      err << name << ": " << e.what() << "\n";
    }
    try {
      write_atomically(out / (name + ".json"), r.to_json(config.timing).dump(2) + "\n");
    } catch (const std::exception& e) {
      err << "cannot write report: " << e.what() << "\n";
      return 1;
    }
    log << (r.pass ? "PASS " : "FAIL ") << name;
    if (config.timing) log << " (" << r.runtime << " s)";
    log << "\n";
    reports.push_back(std::move(r));
  }
  try {
    write_atomically(out / "summary.json", summary_index(reports).dump(2) + "\n");
  } catch (const std::exception& e) {
    err << "cannot write summary: " << e.what() << "\n";
    return 1;
  }
  for (const auto& r : reports)
    if (!r.pass) return 1;
  return 0;
}

}  // namespace mav
