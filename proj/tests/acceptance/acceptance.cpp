// Runs every shipped experiment configuration through the hlab executable and
// re-checks the reports against bounds fixed here, independently of the
// tolerances stored in the configs. Prints one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path kConfigDir = HLAB_CONFIG_DIR;
const fs::path kCli = HLAB_CLI_PATH;

struct Execution {
  int exit_code = -1;
  double seconds = 0;
  json report;
  std::string samples;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Execution execute(const std::string& subcommand, const std::string& config, const fs::path& out) {
  fs::remove_all(out);
  const std::string command = "\"" + kCli.string() + "\" " + subcommand + " --config \"" +
                              (kConfigDir / config).string() + "\" --out \"" + out.string() + "\" > \"" +
                              (out.string() + ".log") + "\" 2>&1";
  const auto start = std::chrono::steady_clock::now();
  const int status = std::system(command.c_str());
  Execution e;
  e.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  e.exit_code = (status != -1 && WIFEXITED(status)) ? WEXITSTATUS(status) : -1;
  if (fs::exists(out / "report.json")) e.report = json::parse(slurp(out / "report.json"));
  if (fs::exists(out / "samples.csv")) e.samples = slurp(out / "samples.csv");
  return e;
}

// Collects failure reasons for one criterion.
class Verdict {
 public:
  void require(bool ok, const std::string& why) {
    if (!ok) reasons_.push_back(why);
  }
  bool passed() const { return reasons_.empty(); }
  std::string text() const {
    std::string s;
    for (const std::string& r : reasons_) s += (s.empty() ? "" : "; ") + r;
    return s;
  }

 private:
  std::vector<std::string> reasons_;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

void require_run(Verdict& v, const Execution& e, double max_seconds) {
  v.require(e.exit_code == 0, "exit code " + std::to_string(e.exit_code));
  v.require(e.seconds <= max_seconds, "runtime " + fmt(e.seconds) + " s exceeds " + fmt(max_seconds) + " s");
  v.require(e.report.is_object(), "no report.json");
}

double metric(const json& run, const std::string& name) {
  return run.at("metrics").contains(name) ? run["metrics"][name].get<double>() : INFINITY;
}

// Every entry error bounded; returns the worst one.
double worst_entry(Verdict& v, const json& report, double bound, std::size_t entries_per_run) {
  double worst = 0;
  for (const json& run : report.value("runs", json::array())) {
    const json& entries = run.at("entries");
    v.require(entries.size() == entries_per_run,
              run.at("label").get<std::string>() + " has " + std::to_string(entries.size()) + " entries");
    for (const json& e : entries) {
      const double err = e.at("error").get<double>();
      worst = std::max(worst, err);
      v.require(err <= bound, run.at("label").get<std::string>() + " " + e.at("label").get<std::string>() + " error " +
                                  fmt(err) + " > " + fmt(bound));
    }
  }
  return worst;
}

std::set<std::string> labels(const json& report) {
  std::set<std::string> out;
  for (const json& run : report.value("runs", json::array())) out.insert(run.at("label").get<std::string>());
  return out;
}

void require_labels(Verdict& v, const json& report, const std::vector<std::string>& wanted) {
  const std::set<std::string> have = labels(report);
  for (const std::string& w : wanted) v.require(have.count(w) == 1, "missing run " + w);
}

struct Criterion {
  int id;
  std::string title;
  std::function<std::string(Verdict&)> check;
};

}  // namespace

int main() {
  const fs::path work = fs::temp_directory_path() / "hlab_acceptance";
  fs::create_directories(work);
  std::vector<std::string> first_samples(3);

  const std::vector<Criterion> criteria{
      {1, "exact left-inverse sweep k<=6 o<=4 2<=d<=8",
       [&](Verdict& v) {
         const Execution e = execute("verify-combinatorics", "c01_verify_combinatorics.json", work / "c01");
         require_run(v, e, 10);
         if (!e.report.is_object()) return std::string();
         const json& cert = e.report.at("certificate");
         v.require(cert.at("all_hold") == true, "certificate reports a failing identity");
         v.require(cert.at("cases") == 7 * 5 * 7, "case count " + cert.at("cases").dump());
         std::size_t nonzero = 0;
         for (const json& c : cert.at("entries"))
           for (const json& r : c.at("residual")) nonzero += r != "0";
         v.require(nonzero == 0, std::to_string(nonzero) + " nonzero residuals");
         return "cases=" + cert.at("cases").dump() + " runtime=" + fmt(e.seconds) + "s";
       }},
      {2, "Mellin scaling, IBP and M' finiteness",
       [&](Verdict& v) {
         const Execution e = execute("mellin-check", "c02_mellin_check.json", work / "c02");
         require_run(v, e, 5);
         if (!e.report.is_object()) return std::string();
         const json& run = e.report.at("runs").at(0);
         const double scaling = metric(run, "max_scaling_error");
         const double ibp = metric(run, "max_ibp_error");
         v.require(scaling <= 1e-10, "scaling error " + fmt(scaling));
         v.require(ibp <= 1e-10, "ibp error " + fmt(ibp));
         v.require(metric(run, "nonfinite_prime_count") == 0, "non-finite M' values");
         for (int n = -9; n <= 9; ++n)
           v.require(std::isfinite(metric(run, "mellin_prime_at_" + std::to_string(n))),
                     "M' missing at " + std::to_string(n));
         return "scaling=" + fmt(scaling) + " ibp=" + fmt(ibp) + " runtime=" + fmt(e.seconds) + "s";
       }},
      {3, "s-expansion of M'((cos f_s)_odd)(1), 4 coefficients",
       [&](Verdict& v) {
         const Execution e = execute("msexp-check", "c03_msexp_check.json", work / "c03");
         require_run(v, e, 5);
         if (!e.report.is_object()) return std::string();
         const double worst = worst_entry(v, e.report, 1e-6, 4);
         return "max_rel_error=" + fmt(worst) + " runtime=" + fmt(e.seconds) + "s";
       }},
      {4, "shift consistency of transport solutions, gaussian potential",
       [&](Verdict& v) {
         const Execution e = execute("transport-check", "c04_transport_check.json", work / "c04");
         require_run(v, e, 60);
         if (!e.report.is_object()) return std::string();
         const json& cfg = e.report.at("config");
         v.require(cfg.at("dimensions") == json::array({2, 3}), "dimensions are not {2, 3}");
         v.require(cfg.at("k_max") == 3, "k_max is not 3");
         v.require(cfg.at("transport_z").size() == 4, "z grid does not have 4 points");
         const json& run = e.report.at("runs").at(0);
         const double shift = metric(run, "max_shift_error");
         const double residual = metric(run, "max_transport_residual");
         v.require(shift <= 1e-7, "shift error " + fmt(shift));
         v.require(residual <= 1e-6, "transport residual " + fmt(residual));
         return "shift=" + fmt(shift) + " residual=" + fmt(residual) + " runtime=" + fmt(e.seconds) + "s";
       }},
      {5, "forward s-ladder against a(k,n) derivative formula",
       [&](Verdict& v) {
         const Execution e = execute("intexp-forward", "c05_intexp_forward.json", work / "c05");
         require_run(v, e, 60);
         if (!e.report.is_object()) return std::string();
         require_labels(v, e.report,
                        {"d=2 curve=straight", "d=2 curve=hyperbolic", "d=4 curve=straight", "d=4 curve=hyperbolic"});
         const double worst = worst_entry(v, e.report, 1e-4, 3);
         return "max_rel_error=" + fmt(worst) + " runtime=" + fmt(e.seconds) + "s";
       }},
      {6, "diagonal V^k = mu^k from the z-family",
       [&](Verdict& v) {
         const Execution e = execute("extract-diagonal", "c06_extract_diagonal.json", work / "c06");
         require_run(v, e, 120);
         if (!e.report.is_object()) return std::string();
         require_labels(v, e.report, {"d=4 o=0 curve=straight", "d=4 o=1 curve=straight", "d=2 o=0 curve=straight"});
         const double worst = worst_entry(v, e.report, 1e-2, 3);
         first_samples[0] = e.samples;
         return "max_rel_error=" + fmt(worst) + " runtime=" + fmt(e.seconds) + "s";
       }},
      {7, "diagonal V^k = mu^k from the product spacetime",
       [&](Verdict& v) {
         const Execution e = execute("extract-product", "c07_extract_product.json", work / "c07");
         require_run(v, e, 120);
         if (!e.report.is_object()) return std::string();
         require_labels(v, e.report, {"d=2 curve=straight", "d=2 curve=hyperbolic", "d=3 curve=straight"});
         const double worst = worst_entry(v, e.report, 2e-2, 3);
         double delta = 0;
         for (const json& run : e.report.at("runs"))
           for (int k = 0; k <= 2; ++k) delta = std::max(delta, metric(run, "xi_refinement_delta_k" + std::to_string(k)));
         v.require(delta <= 1e-6, "xi refinement delta " + fmt(delta));
         first_samples[1] = e.samples;
         return "max_rel_error=" + fmt(worst) + " xi_delta=" + fmt(delta) + " runtime=" + fmt(e.seconds) + "s";
       }},
      {8, "off-diagonal V^k_x(y) = mu^k on both branches",
       [&](Verdict& v) {
         const Execution e = execute("extract-offdiagonal", "c08_extract_offdiagonal.json", work / "c08");
         require_run(v, e, 60);
         if (!e.report.is_object()) return std::string();
         require_labels(v, e.report, {"d=2 y=(1,0.3)", "d=2 y=(-1,0.3)"});
         const double worst = worst_entry(v, e.report, 1e-2, 3);
         double residual = 0;
         for (const json& run : e.report.at("runs")) residual = std::max(residual, metric(run, "eps_ladder_residual"));
         v.require(residual <= 1e-6, "eps ladder residual " + fmt(residual));
         first_samples[2] = e.samples;
         return "max_rel_error=" + fmt(worst) + " eps_residual=" + fmt(residual) + " runtime=" + fmt(e.seconds) + "s";
       }},
      {9, "scalar curvature of flat massless d=4",
       [&](Verdict& v) {
         const Execution e = execute("scal-d4", "c09_scal_d4.json", work / "c09");
         require_run(v, e, 60);
         if (!e.report.is_object()) return std::string();
         const json& entry = e.report.at("runs").at(0).at("entries").at(0);
         const double re = entry.at("recovered").at(0).get<double>();
         const double im = entry.at("recovered").at(1).get<double>();
         const double scal = std::hypot(re, im);
         v.require(scal <= 5e-3, "|scal| = " + fmt(scal));
         return "|scal|=" + fmt(scal) + " runtime=" + fmt(e.seconds) + "s";
       }},
      {10, "repeated runs give byte-identical samples",
       [&](Verdict& v) {
         const std::vector<std::pair<std::string, std::string>> runs{
             {"extract-diagonal", "c06_extract_diagonal.json"},
             {"extract-product", "c07_extract_product.json"},
             {"extract-offdiagonal", "c08_extract_offdiagonal.json"}};
         for (std::size_t i = 0; i < runs.size(); ++i) {
           const Execution e = execute(runs[i].first, runs[i].second, work / ("repeat" + std::to_string(i)));
           v.require(!first_samples[i].empty(), runs[i].first + " has no first-run samples");
           v.require(e.samples == first_samples[i], runs[i].first + " samples differ between runs");
         }
         return std::string("compared ") + std::to_string(runs.size()) + " sample files";
       }},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    Verdict v;
    std::string detail;
    try {
      detail = c.check(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    failures += !v.passed();
    std::cout << "criterion " << c.id << ": " << (v.passed() ? "PASS" : "FAIL") << "  " << c.title;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    if (!v.passed()) std::cout << "  reasons: " << v.text();
    std::cout << std::endl;
  }
  fs::remove_all(work);
  return failures == 0 ? 0 : 1;
}
