#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "hlab_cli/run_config.hpp"

namespace hlab::cli {

enum ExitCode : int { kPass = 0, kToleranceFailure = 1, kConfigFailure = 2, kNumericalFailure = 3 };

/// Everything one run produces.
struct RunOutcome {
  int exit_code = kPass;
  nlohmann::json report;
  /// Raw samples with a leading "run" column; byte-identical across
  /// repeated runs of the same configuration.
  std::string samples_csv;
  std::string summary;
};

/// Executes a validated configuration. Library errors become exit code 3
/// with the diagnostic in the report; a limit naming an unknown metric
/// raises ConfigError.
RunOutcome run(const RunConfig& config);

/// Writes report.json, samples.csv and summary.txt under dir, each through
/// a temporary file and a rename.
void write_outputs(const RunOutcome& outcome, const std::filesystem::path& dir);

}  // namespace hlab::cli
