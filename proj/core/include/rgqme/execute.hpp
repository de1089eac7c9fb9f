// execute.hpp — subcommand dispatch and deterministic CSV/JSON export

#pragma once

#include <string>

#include "rgqme/run_config.hpp"

namespace rgqme::cli {

// Runs the configured pipeline and writes <out_dir>/<command>.csv plus
// <out_dir>/<command>_summary.json (write-temp-then-rename). Returns 0 on
// success, 1 on configuration errors, 2 on numerical failure; on failure a
// one-line machine-parsable tag goes to stderr.
int execute(const RunConfig& cfg, const std::string& out_dir, bool quiet = false);

// Convenience: parse + execute, mapping parse failures to exit code 1.
int run(const std::string& config_text, const std::string& out_dir, bool quiet = false);

} // namespace rgqme::cli
