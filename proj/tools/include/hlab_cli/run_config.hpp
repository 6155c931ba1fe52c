#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hlab/pipelines.hpp"
#include "hlab/types.hpp"

namespace hlab::cli {

/// Subcommands, one per experiment.
const std::vector<std::string>& subcommands();

/// Validated run description. Built from a single JSON document with
/// "schema": 1; every key is flat and documented in the README.
struct RunConfig {
  std::string subcommand;
  /// Effective document (file merged with flag overrides), echoed into reports.
  nlohmann::json document;

  std::vector<std::size_t> dimensions;
  Real mass = 0.2L;
  std::string potential = "gaussian";
  Real potential_amplitude = 0.8L;
  Real potential_width = 1.0L;
  std::vector<Complex> transport_z;
  std::vector<std::string> curves = {"straight"};
  std::string test_function = "odd-bump";
  std::string even_profile;
  std::size_t k_max = 2;
  std::vector<int> offsets = {0};
  int o_max = 4;
  int d_min = 2;
  int d_max = 8;
  GeometricGrid s_grid;
  std::size_t z_nodes = 6;
  Real z_radius = 0.5L;
  std::size_t z_degree = 5;
  Real xi_first = 1.05L;
  Real xi_last = 1.5L;
  Real xi_step = 0.05L;
  std::optional<Real> xi_refined_step;
  Real eps0_fraction = 0.5L;
  Real eps_ratio = 0.7L;
  std::size_t eps_count = 16;
  std::vector<Point> targets;
  std::optional<std::size_t> extra_slots;
  Real alpha = 1;
  std::size_t terms = 4;
  SamplePrecision precision = SamplePrecision::extended;
  /// Bound on every reported entry error.
  std::optional<Real> tolerance;
  /// Upper bounds on named report metrics.
  std::map<std::string, Real> limits;
};

/// Validates a document and applies defaults. precision_env is the value of
/// HLAB_PRECISION, used when the document has no "precision" key.
/// Throws ConfigError on unknown keys, wrong types or bad values.
RunConfig parse_config(const nlohmann::json& document, const std::optional<std::string>& precision_env = {});

/// Reads a JSON file; ConfigError if it is missing or malformed.
nlohmann::json load_document(const std::string& path);

}  // namespace hlab::cli
