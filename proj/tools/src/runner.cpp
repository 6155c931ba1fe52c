#include "hlab_cli/runner.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hlab/checks.hpp"
#include "hlab/combinatorics.hpp"
#include "hlab/curve.hpp"
#include "hlab/errors.hpp"
#include "hlab/pipelines.hpp"

namespace hlab::cli {

namespace {

using nlohmann::json;

// One experiment inside a subcommand run, e.g. one (d, offset, curve) triple.
struct Experiment {
  std::string label;
  ExtractionReport report;
};

struct Check {
  std::string run;
  std::string name;
  Real value = 0;
  Real limit = 0;
  bool pass = true;
};

std::string format_real(Real v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.21Lg", v);
  return buf;
}

// Labels use the shortest form that survives a double round trip.
std::string label_real(Real v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", static_cast<double>(v));
  return buf;
}

json complex_json(Complex v) { return json::array({static_cast<double>(v.real()), static_cast<double>(v.imag())}); }

json report_json(const Experiment& e) {
  const ExtractionReport& r = e.report;
  json entries = json::array();
  for (const ReportEntry& en : r.entries) {
    entries.push_back({{"label", en.label},
                       {"k", en.k},
                       {"recovered", complex_json(en.recovered)},
                       {"reference", complex_json(en.reference)},
                       {"error", static_cast<double>(en.error)},
                       {"error_kind", en.relative ? "relative" : "absolute"}});
  }
  json diagnostics = json::array();
  for (const BracketDiagnostics& d : r.diagnostics) {
    json errors = json::array();
    for (Real v : d.coefficient_errors) errors.push_back(static_cast<double>(v));
    diagnostics.push_back({{"bracket", d.bracket},
                           {"residual_norm", static_cast<double>(d.residual_norm)},
                           {"condition_estimate", static_cast<double>(d.condition_estimate)},
                           {"coefficient_errors", errors}});
  }
  json metrics = json::object();
  for (const auto& [name, v] : r.metrics) metrics[name] = static_cast<double>(v);
  return {{"label", e.label},
          {"pipeline", r.pipeline},
          {"provenance", r.provenance},
          {"convention", r.convention},
          {"configuration", r.configuration},
          {"entries", entries},
          {"diagnostics", diagnostics},
          {"metrics", metrics}};
}

TimelikeCurve make_curve(const std::string& name, std::size_t d) {
  Point x(d, 0);
  if (name == "hyperbolic") return TimelikeCurve::hyperbolic(x);
  Point u(d, 0);
  u[0] = 1;
  return TimelikeCurve::straight_line(x, u);
}

OddTestFunction make_test_function(const RunConfig&) { return OddTestFunction::standard(); }

SmoothProfile make_even_profile(const RunConfig& c) {
  return c.even_profile == "cosine" ? cosine_profile() : bump_profile();
}

std::string dim_label(std::size_t d) { return "d=" + std::to_string(d); }

std::vector<Experiment> run_experiments(const RunConfig& c) {
  std::vector<Experiment> out;
  const std::string& sub = c.subcommand;
  const OddTestFunction f = make_test_function(c);
  if (sub == "mellin-check") {
    out.push_back({"mellin", mellin_check(f.profile(), make_even_profile(c), {})});
  } else if (sub == "msexp-check") {
    MsExpOptions o;
    o.alpha = c.alpha;
    o.terms = c.terms;
    o.s_grid = c.s_grid;
    if (c.extra_slots) o.extra_slots = *c.extra_slots;
    out.push_back({"msexp h=" + c.even_profile, msexp_check(make_even_profile(c), f, o)});
  } else if (sub == "transport-check") {
    TransportCheckOptions o;
    o.dimensions = c.dimensions;
    o.k_max = c.k_max;
    o.amplitude = c.potential_amplitude;
    o.width = c.potential_width;
    o.z_grid = c.transport_z;
    out.push_back({"transport " + c.potential, transport_check(o)});
  } else if (sub == "extract-diagonal" || sub == "extract-diagonal-powers") {
    for (std::size_t d : c.dimensions)
      for (int offset : c.offsets)
        for (const std::string& curve : c.curves) {
          DiagonalOptions o;
          o.k_max = c.k_max;
          o.offset = offset;
          o.s_grid = c.s_grid;
          o.z_nodes = c.z_nodes;
          o.z_radius = c.z_radius;
          o.z_degree = c.z_degree;
          if (c.extra_slots) o.extra_slots = *c.extra_slots;
          o.precision = c.precision;
          const GreensFamily fam{d, c.mass};
          const TimelikeCurve w = make_curve(curve, d);
          const std::string label = dim_label(d) + " o=" + std::to_string(offset) + " curve=" + curve;
          out.push_back({label, sub == "extract-diagonal" ? extract_diagonal_zfamily(fam, w, f, o)
                                                          : extract_diagonal_powers(fam, w, f, o)});
        }
  } else if (sub == "scal-d4") {
    for (std::size_t d : c.dimensions)
      for (const std::string& curve : c.curves) {
        DiagonalOptions o;
        o.s_grid = c.s_grid;
        o.z_nodes = c.z_nodes;
        o.z_radius = c.z_radius;
        o.z_degree = c.z_degree;
        if (c.extra_slots) o.extra_slots = *c.extra_slots;
        o.precision = c.precision;
        out.push_back({dim_label(d) + " curve=" + curve,
                       scalar_curvature_d4(GreensFamily{d, c.mass}, make_curve(curve, d), f, o)});
      }
  } else if (sub == "extract-product") {
    for (std::size_t d : c.dimensions)
      for (const std::string& curve : c.curves) {
        ProductOptions o;
        o.k_max = c.k_max;
        o.s_grid = c.s_grid;
        o.xi_grid = xi_grid(c.xi_first, c.xi_last, c.xi_step);
        if (c.xi_refined_step) o.refined_xi_grid = xi_grid(c.xi_first, c.xi_last, *c.xi_refined_step);
        if (c.extra_slots) o.extra_slots = *c.extra_slots;
        o.precision = c.precision;
        out.push_back({dim_label(d) + " curve=" + curve,
                       extract_diagonal_product(GreensFamily{d, c.mass}, make_curve(curve, d), f, o)});
      }
  } else if (sub == "extract-offdiagonal") {
    for (std::size_t d : c.dimensions)
      for (const Point& y : c.targets) {
        OffdiagonalOptions o;
        o.k_max = c.k_max;
        o.eps0_fraction = c.eps0_fraction;
        o.eps_ratio = c.eps_ratio;
        o.eps_count = c.eps_count;
        if (c.extra_slots) o.extra_slots = *c.extra_slots;
        o.precision = c.precision;
        std::ostringstream label;
        label << dim_label(d) << " y=(";
        for (std::size_t i = 0; i < y.size(); ++i) label << (i ? "," : "") << label_real(y[i]);
        label << ")";
        out.push_back({label.str(), extract_offdiagonal(GreensFamily{d, c.mass}, Point(d, 0), y,
                                                        CutoffFunction::standard(), o)});
      }
  } else if (sub == "intexp-forward") {
    for (std::size_t d : c.dimensions)
      for (const std::string& curve : c.curves) {
        IntexpOptions o;
        o.slots = c.terms;
        o.s_grid = c.s_grid;
        if (c.extra_slots) o.extra_slots = *c.extra_slots;
        o.precision = c.precision;
        out.push_back({dim_label(d) + " curve=" + curve,
                       intexp_forward_check(GreensFamily{d, c.mass}, make_curve(curve, d), f, o)});
      }
  } else {
    throw ConfigError("no runner for subcommand '" + sub + "'");
  }
  return out;
}

std::vector<Check> evaluate_checks(const RunConfig& c, const std::vector<Experiment>& runs) {
  std::vector<Check> checks;
  for (const Experiment& e : runs) {
    if (c.tolerance) {
      for (const ReportEntry& en : e.report.entries)
        checks.push_back({e.label, en.label, en.error, *c.tolerance, en.error <= *c.tolerance});
    }
  }
  for (const auto& [name, limit] : c.limits) {
    bool found = false;
    for (const Experiment& e : runs) {
      const auto it = e.report.metrics.find(name);
      if (it == e.report.metrics.end()) continue;
      found = true;
      checks.push_back({e.label, name, it->second, limit, it->second <= limit});
    }
    if (!found) throw ConfigError("limit '" + name + "' names a metric that no run reports");
  }
  return checks;
}

std::string samples_csv(const std::vector<Experiment>& runs) {
  std::string out;
  if (runs.empty()) return out;
  out += "run";
  for (const std::string& col : runs.front().report.sample_columns) out += "," + col;
  out += "\n";
  for (std::size_t i = 0; i < runs.size(); ++i) {
    for (const std::vector<Real>& row : runs[i].report.sample_rows) {
      out += std::to_string(i);
      for (Real v : row) out += "," + format_real(v);
      out += "\n";
    }
  }
  return out;
}

json checks_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const Check& ch : checks)
    out.push_back({{"run", ch.run},
                   {"name", ch.name},
                   {"value", static_cast<double>(ch.value)},
                   {"limit", static_cast<double>(ch.limit)},
                   {"pass", ch.pass}});
  return out;
}

std::string summary_text(const RunConfig& c, const std::vector<Experiment>& runs, const std::vector<Check>& checks,
                         const std::string& status) {
  std::ostringstream os;
  os << c.subcommand << ": " << status << "\n";
  os << "precision: " << to_string(c.precision) << "\n";
  for (const Experiment& e : runs) {
    os << "\n[" << e.label << "]\n";
    for (const ReportEntry& en : e.report.entries) {
      os << "  " << en.label << "  recovered " << format_real(en.recovered.real()) << "  reference "
         << format_real(en.reference.real()) << "  " << (en.relative ? "rel" : "abs") << " error "
         << static_cast<double>(en.error) << "\n";
    }
    for (const auto& [name, v] : e.report.metrics) os << "  " << name << " = " << static_cast<double>(v) << "\n";
  }
  if (!checks.empty()) {
    os << "\nchecks:\n";
    for (const Check& ch : checks) {
      os << "  " << (ch.pass ? "ok   " : "FAIL ") << ch.run << " / " << ch.name << ": " << static_cast<double>(ch.value)
         << " <= " << static_cast<double>(ch.limit) << "\n";
    }
  }
  return os.str();
}

RunOutcome run_combinatorics(const RunConfig& c) {
  RunOutcome out;
  json certificates = json::array();
  std::string csv = "k,o,d,l,residual\n";
  bool all = true;
  std::ostringstream summary;
  std::size_t failures = 0;
  std::size_t count = 0;
  for (int d = c.d_min; d <= c.d_max; ++d)
    for (int o = 0; o <= c.o_max; ++o)
      for (int k = 0; k <= static_cast<int>(c.k_max); ++k) {
        const LeftInverseCertificate cert = verify_left_inverse(k, o, d);
        json residual = json::array();
        for (std::size_t l = 0; l < cert.residual.size(); ++l) {
          residual.push_back(hlab::to_string(cert.residual[l]));
          csv += std::to_string(k) + "," + std::to_string(o) + "," + std::to_string(d) + "," + std::to_string(l) +
                 "," + hlab::to_string(cert.residual[l]) + "\n";
        }
        certificates.push_back({{"k", k}, {"o", o}, {"d", d}, {"holds", cert.holds}, {"residual", residual}});
        all = all && cert.holds;
        ++count;
        if (!cert.holds) {
          ++failures;
          summary << "  fails: k=" << k << " o=" << o << " d=" << d << "\n";
        }
      }
  const std::string status = all ? "pass" : "fail";
  out.exit_code = all ? kPass : kToleranceFailure;
  out.report = {{"schema", 1},
                {"subcommand", c.subcommand},
                {"config", c.document},
                {"status", status},
                {"certificate", {{"all_hold", all}, {"cases", count}, {"entries", certificates}}}};
  out.samples_csv = csv;
  out.summary = c.subcommand + ": " + status + "\n" + std::to_string(count) + " cases, " + std::to_string(failures) +
                " failures (exact rational arithmetic)\n" + summary.str();
  return out;
}

}  // namespace

RunOutcome run(const RunConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  RunOutcome out;
  try {
    if (config.subcommand == "verify-combinatorics") {
      out = run_combinatorics(config);
    } else {
      const std::vector<Experiment> runs = run_experiments(config);
      const std::vector<Check> checks = evaluate_checks(config, runs);
      bool pass = true;
      for (const Check& ch : checks) pass = pass && ch.pass;
      const std::string status = pass ? "pass" : "fail";
      json run_list = json::array();
      for (const Experiment& e : runs) run_list.push_back(report_json(e));
      out.exit_code = pass ? kPass : kToleranceFailure;
      out.report = {{"schema", 1},     {"subcommand", config.subcommand}, {"config", config.document},
                    {"status", status}, {"precision", to_string(config.precision)},
                    {"runs", run_list}, {"checks", checks_json(checks)}};
      out.samples_csv = samples_csv(runs);
      out.summary = summary_text(config, runs, checks, status);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const Error& e) {
    out.exit_code = kNumericalFailure;
    out.report = {{"schema", 1},
                  {"subcommand", config.subcommand},
                  {"config", config.document},
                  {"status", "error"},
                  {"error", e.what()}};
    out.samples_csv.clear();
    out.summary = config.subcommand + ": numerical error\n" + e.what() + "\n";
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out.report["elapsed_seconds"] = elapsed;
  return out;
}

void write_outputs(const RunOutcome& outcome, const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  auto write = [&dir](const std::string& name, const std::string& content) {
    const fs::path target = dir / name;
    const fs::path temp = dir / (name + ".tmp");
    {
      std::ofstream os(temp, std::ios::binary | std::ios::trunc);
      if (!os) throw std::runtime_error("cannot write " + temp.string());
      os << content;
      if (!os) throw std::runtime_error("write failed for " + temp.string());
    }
    fs::rename(temp, target);
  };
  write("report.json", outcome.report.dump(2) + "\n");
  write("samples.csv", outcome.samples_csv);
  write("summary.txt", outcome.summary);
}

}  // namespace hlab::cli
