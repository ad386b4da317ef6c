#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "mavals/cli/config.hpp"

namespace mav {

/// Writes `text` to `path` through a temporary file in the same directory and
/// a rename, so readers never see a partial report.
void write_atomically(const std::filesystem::path& path, const std::string& text);

/// Validates the config, runs the experiment(s) and writes <out>/<name>.json
/// plus <out>/summary.json. Returns 0 if every check passes, 1 if any fails
/// (reports are still written) and 2 for an invalid config. One line per
/// experiment goes to `log`, diagnostics to `err`.
int dispatch(const RunConfig& config, std::ostream& log, std::ostream& err);

}  // namespace mav
