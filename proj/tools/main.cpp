#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hlab/errors.hpp"
#include "hlab_cli/run_config.hpp"
#include "hlab_cli/runner.hpp"

namespace {

// Flag values that override keys of the loaded document.
struct Overrides {
  std::optional<int> d;
  std::vector<int> dims;
  std::optional<double> mass;
  std::optional<int> kmax;
  std::optional<int> offset;
  std::optional<int> omax;
  std::optional<int> dmin;
  std::optional<int> dmax;
  std::optional<std::string> potential;
  std::vector<std::string> curves;
  std::optional<std::string> precision;
  std::optional<double> tolerance;
  std::optional<double> s0;
  std::optional<int> terms;
};

void add_overrides(CLI::App* app, Overrides& o, std::string& config_path, std::string& out_dir) {
  app->add_option("--config", config_path, "JSON run configuration (schema 1)");
  app->add_option("--out", out_dir, "Directory for report.json, samples.csv and summary.txt");
  app->add_option("--d", o.d, "Single spacetime dimension");
  app->add_option("--dims", o.dims, "List of spacetime dimensions");
  app->add_option("--mass", o.mass, "Mass of the constant family");
  app->add_option("--kmax", o.kmax, "Largest coefficient index k");
  app->add_option("--offset", o.offset, "Single offset o");
  app->add_option("--omax", o.omax, "Largest offset (verify-combinatorics)");
  app->add_option("--dmin", o.dmin, "Smallest dimension (verify-combinatorics)");
  app->add_option("--dmax", o.dmax, "Largest dimension (verify-combinatorics)");
  app->add_option("--potential", o.potential, "Potential model (transport-check)");
  app->add_option("--curve", o.curves, "Curve name(s): straight, hyperbolic");
  app->add_option("--precision", o.precision, "Sample precision: extended or double");
  app->add_option("--tolerance", o.tolerance, "Bound on every reported entry error");
  app->add_option("--s0", o.s0, "First point of the geometric s grid");
  app->add_option("--terms", o.terms, "Number of expansion terms or ladder slots");
}

void apply_overrides(const Overrides& o, nlohmann::json& doc) {
  if (o.d) doc["dimensions"] = nlohmann::json::array({*o.d});
  if (!o.dims.empty()) doc["dimensions"] = o.dims;
  if (o.mass) doc["mass"] = *o.mass;
  if (o.kmax) doc["k_max"] = *o.kmax;
  if (o.offset) doc["offsets"] = nlohmann::json::array({*o.offset});
  if (o.omax) doc["o_max"] = *o.omax;
  if (o.dmin) doc["d_min"] = *o.dmin;
  if (o.dmax) doc["d_max"] = *o.dmax;
  if (o.potential) doc["potential"] = *o.potential;
  if (!o.curves.empty()) doc["curves"] = o.curves;
  if (o.precision) doc["precision"] = *o.precision;
  if (o.tolerance) doc["tolerance"] = *o.tolerance;
  if (o.s0) doc["s0"] = *o.s0;
  if (o.terms) doc["terms"] = *o.terms;
}

}  // namespace

int main(int argc, char** argv) {
  namespace cli = hlab::cli;
  CLI::App app{"Hadamard coefficient extraction experiments"};
  app.require_subcommand(1);

  std::map<std::string, Overrides> overrides;
  std::string config_path;
  std::string out_dir = "hlab-out";
  for (const std::string& name : cli::subcommands()) {
    CLI::App* sub = app.add_subcommand(name);
    add_overrides(sub, overrides[name], config_path, out_dir);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kConfigFailure;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    nlohmann::json doc = config_path.empty() ? nlohmann::json{{"schema", 1}} : cli::load_document(config_path);
    if (!doc.is_object()) throw hlab::ConfigError("config must be a JSON object");
    if (doc.contains("subcommand") && doc["subcommand"] != name)
      throw hlab::ConfigError("config is for " + doc["subcommand"].dump() + ", not '" + name + "'");
    doc["subcommand"] = name;
    apply_overrides(overrides[name], doc);

    std::optional<std::string> env;
    if (const char* p = std::getenv("HLAB_PRECISION")) env = p;
    const cli::RunConfig config = cli::parse_config(doc, env);
    const cli::RunOutcome outcome = cli::run(config);
    cli::write_outputs(outcome, out_dir);
    std::cout << outcome.summary;
    if (outcome.exit_code == cli::kNumericalFailure) std::cerr << outcome.summary;
    return outcome.exit_code;
  } catch (const hlab::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return cli::kConfigFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return cli::kNumericalFailure;
  }
}
