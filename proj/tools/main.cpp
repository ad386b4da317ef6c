#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "mavals/cli/dispatch.hpp"
#include "mavals/error.hpp"
#include "mavals/verify/registry.hpp"

namespace {

void print_list() {
  for (const auto& e : mav::experiment_registry())
    std::cout << e.name << "\n  anchor: " << e.anchor << "\n  " << e.summary << "\n";
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mav::ConfigError("cannot open config file " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw mav::ConfigError("config file " + path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monge-Ampere valuation experiments"};
  app.require_subcommand(0, 1);
  bool list_flag = false;
  app.add_flag("--list", list_flag, "List experiments with their anchors");

  auto* list = app.add_subcommand("list", "List experiments with their anchors");

  auto* run = app.add_subcommand("run", "Run one experiment, or all");
  std::string experiment, config_file, field, body, output;
  int dim = 0, degree = -1, cells = 0, trials = 0, threads = 1;
  double sigma = 0, fd_step = 0;
  std::vector<double> sigmas;
  std::uint64_t seed = 1;
  bool timing = false;
  run->add_option("experiment", experiment, "Experiment name or 'all'");
  run->add_option("--config", config_file, "JSON config file; flags override its values");
  run->add_option("--dim", dim, "Dimension n");
  run->add_option("--degree", degree, "Degree i");
  run->add_option("--field", field, "R, C, H or O2");
  run->add_option("--cells", cells, "Grid cells per axis");
  run->add_option("--sigma", sigma, "Smoothing width");
  run->add_option("--sigmas", sigmas, "Schedule of widths (bump widths, smoothing widths or epsilons)");
  run->add_option("--fd-step", fd_step, "Finite-difference step");
  run->add_option("--trials", trials, "Number of random trials / pairs / bodies");
  run->add_option("--body", body, "Body name (volume-lemma: random, cube3, centered_cube3)");
  run->add_option("--seed", seed, "Random seed");
  run->add_option("--threads", threads, "Worker threads; results do not depend on it");
  run->add_option("--output", output, "Report directory (default $MAVALS_OUTPUT_DIR or ./reports)");
  run->add_flag("--timing", timing, "Include runtimes in reports");

  auto* check = app.add_subcommand("validate-config", "Parse and validate a JSON config without running it");
  std::string check_file;
  check->add_option("file", check_file, "Config file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (list_flag || list->parsed()) {
    print_list();
    return 0;
  }

  try {
    if (check->parsed()) {
      const mav::RunConfig c = mav::config_from_json(read_json(check_file));
      mav::validate(c);
      std::cout << "valid: " << mav::to_json(c).dump() << "\n";
      return 0;
    }
    if (run->parsed()) {
      mav::RunConfig c;
      if (!config_file.empty()) c = mav::config_from_json(read_json(config_file));
      auto& o = c.options;
      if (!experiment.empty()) c.experiment = experiment;
      if (run->count("--dim")) o.dim = dim;
      if (run->count("--degree")) o.degree = degree;
      if (run->count("--field")) o.field = mav::parse_field(field);
      if (run->count("--cells")) o.cells = cells;
      if (run->count("--sigma")) o.sigma = sigma;
      if (run->count("--sigmas")) o.sigmas = sigmas;
      if (run->count("--fd-step")) o.fd_step = fd_step;
      if (run->count("--trials")) o.trials = trials;
      if (run->count("--body")) o.body = body;
      if (run->count("--seed")) o.seed = seed;
      if (run->count("--threads")) o.threads = threads;
      if (run->count("--output")) c.output_dir = output;
      if (timing) c.timing = true;
      return mav::dispatch(c, std::cout, std::cerr);
    }
  } catch (const mav::ConfigError& e) {
    std::cerr << "invalid config: " << e.what() << "\n";
    return 2;
  }
  std::cout << app.help();
  return 0;
}
