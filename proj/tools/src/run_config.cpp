#include "hlab_cli/run_config.hpp"

#include <algorithm>
#include <fstream>
#include <set>

#include "hlab/errors.hpp"

namespace hlab::cli {

namespace {

using nlohmann::json;

const std::set<std::string> kCommonKeys = {"schema", "subcommand", "precision", "tolerance", "limits"};
const std::set<std::string> kSGrid = {"s0", "s_ratio", "s_count"};
const std::set<std::string> kZGrid = {"z_nodes", "z_radius", "z_degree"};

std::set<std::string> merged(std::initializer_list<std::set<std::string>> parts) {
  std::set<std::string> out;
  for (const auto& p : parts) out.insert(p.begin(), p.end());
  return out;
}

const std::map<std::string, std::set<std::string>>& allowed_keys() {
  static const std::map<std::string, std::set<std::string>> table = {
      {"verify-combinatorics", {"k_max", "o_max", "d_min", "d_max"}},
      {"mellin-check", {"test_function", "even_profile"}},
      {"msexp-check", merged({{"test_function", "even_profile", "alpha", "terms", "extra_slots"}, kSGrid})},
      {"transport-check", {"dimensions", "k_max", "potential", "potential_amplitude", "potential_width", "transport_z"}},
      {"extract-diagonal",
       merged({{"dimensions", "mass", "curves", "test_function", "k_max", "offsets", "extra_slots"}, kSGrid, kZGrid})},
      {"extract-diagonal-powers",
       merged({{"dimensions", "mass", "curves", "test_function", "k_max", "offsets", "extra_slots"}, kSGrid, kZGrid})},
      {"scal-d4", merged({{"dimensions", "mass", "curves", "test_function", "extra_slots"}, kSGrid, kZGrid})},
      {"extract-product",
       merged({{"dimensions", "mass", "curves", "test_function", "k_max", "extra_slots", "xi_first", "xi_last",
                "xi_step", "xi_refined_step"},
               kSGrid})},
      {"extract-offdiagonal",
       {"dimensions", "mass", "k_max", "targets", "eps0_fraction", "eps_ratio", "eps_count", "extra_slots"}},
      {"intexp-forward", merged({{"dimensions", "mass", "curves", "test_function", "terms", "extra_slots"}, kSGrid})},
  };
  return table;
}

template <class T>
T get(const json& doc, const std::string& key) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError("key '" + key + "': " + e.what());
  }
}

Real get_real(const json& doc, const std::string& key) {
  const json& v = doc.at(key);
  if (!v.is_number()) throw ConfigError("key '" + key + "' must be a number");
  return static_cast<Real>(v.get<double>());
}

std::size_t get_count(const json& doc, const std::string& key) {
  const json& v = doc.at(key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw ConfigError("key '" + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

Real positive(Real v, const std::string& key) {
  if (!(v > 0)) throw ConfigError("key '" + key + "' must be positive");
  return v;
}

void one_of(const std::string& value, std::initializer_list<const char*> options, const std::string& key) {
  for (const char* o : options)
    if (value == o) return;
  std::string list;
  for (const char* o : options) list += std::string(list.empty() ? "" : ", ") + o;
  throw ConfigError("key '" + key + "' must be one of {" + list + "}, got '" + value + "'");
}

// Defaults that differ between subcommands.
void apply_subcommand_defaults(RunConfig& c) {
  const std::string& s = c.subcommand;
  if (s == "transport-check") {
    c.dimensions = {2, 3};
    c.k_max = 3;
    c.transport_z = {Complex(-0.3L), Complex(0.2L), Complex(0.45L), Complex(0.1L, 0.25L)};
  } else if (s == "extract-diagonal" || s == "extract-diagonal-powers" || s == "scal-d4") {
    c.dimensions = {4};
  } else {
    c.dimensions = {2};
  }
  if (s == "scal-d4") {
    c.mass = 0;
    c.k_max = 1;
  }
  if (s == "intexp-forward") c.terms = 3;
  if (s == "verify-combinatorics") c.k_max = 6;
  c.even_profile = s == "msexp-check" ? "cosine" : "bump";
}

}  // namespace

const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, keys] : allowed_keys()) out.push_back(name);
    return out;
  }();
  return names;
}

RunConfig parse_config(const json& document, const std::optional<std::string>& precision_env) {
  if (!document.is_object()) throw ConfigError("config must be a JSON object");
  if (!document.contains("schema")) throw ConfigError("config needs \"schema\": 1");
  if (!document.at("schema").is_number_integer() || document.at("schema").get<int>() != 1)
    throw ConfigError("unsupported schema version; expected 1");
  if (!document.contains("subcommand")) throw ConfigError("config needs a \"subcommand\"");

  RunConfig c;
  c.document = document;
  c.subcommand = get<std::string>(document, "subcommand");
  const auto table = allowed_keys().find(c.subcommand);
  if (table == allowed_keys().end()) throw ConfigError("unknown subcommand '" + c.subcommand + "'");
  for (const auto& [key, value] : document.items()) {
    if (!kCommonKeys.count(key) && !table->second.count(key))
      throw ConfigError("key '" + key + "' is not accepted by " + c.subcommand);
  }
  apply_subcommand_defaults(c);
  auto has = [&document](const char* key) { return document.contains(key); };

  if (has("dimensions")) {
    const json& v = document.at("dimensions");
    c.dimensions.clear();
    if (v.is_array()) {
      for (const json& d : v) {
        if (!d.is_number_integer()) throw ConfigError("key 'dimensions' must hold integers");
        c.dimensions.push_back(d.get<std::size_t>());
      }
    } else {
      c.dimensions.push_back(get_count(document, "dimensions"));
    }
    if (c.dimensions.empty()) throw ConfigError("key 'dimensions' is empty");
    for (std::size_t d : c.dimensions)
      if (d < 2) throw ConfigError("dimensions must be at least 2");
  }
  if (has("mass")) c.mass = get_real(document, "mass");
  if (has("potential")) {
    c.potential = get<std::string>(document, "potential");
    one_of(c.potential, {"gaussian"}, "potential");
  }
  if (has("potential_amplitude")) c.potential_amplitude = get_real(document, "potential_amplitude");
  if (has("potential_width")) c.potential_width = positive(get_real(document, "potential_width"), "potential_width");
  if (has("transport_z")) {
    c.transport_z.clear();
    for (const json& z : document.at("transport_z")) {
      if (z.is_number()) {
        c.transport_z.emplace_back(static_cast<Real>(z.get<double>()));
      } else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number()) {
        c.transport_z.emplace_back(static_cast<Real>(z[0].get<double>()), static_cast<Real>(z[1].get<double>()));
      } else {
        throw ConfigError("transport_z entries are numbers or [re, im] pairs");
      }
    }
    if (c.transport_z.empty()) throw ConfigError("key 'transport_z' is empty");
  }
  if (has("curves")) {
    c.curves = get<std::vector<std::string>>(document, "curves");
    if (c.curves.empty()) throw ConfigError("key 'curves' is empty");
    for (const std::string& name : c.curves) one_of(name, {"straight", "hyperbolic"}, "curves");
  }
  if (has("test_function")) {
    c.test_function = get<std::string>(document, "test_function");
    one_of(c.test_function, {"odd-bump"}, "test_function");
  }
  if (has("even_profile")) {
    c.even_profile = get<std::string>(document, "even_profile");
    one_of(c.even_profile, {"bump", "cosine"}, "even_profile");
  }
  if (has("k_max")) c.k_max = get_count(document, "k_max");
  if (has("offsets")) {
    c.offsets = get<std::vector<int>>(document, "offsets");
    if (c.offsets.empty()) throw ConfigError("key 'offsets' is empty");
    for (int o : c.offsets)
      if (o < 0) throw ConfigError("offsets must be non-negative");
  }
  if (has("o_max")) c.o_max = static_cast<int>(get_count(document, "o_max"));
  if (has("d_min")) c.d_min = static_cast<int>(get_count(document, "d_min"));
  if (has("d_max")) c.d_max = static_cast<int>(get_count(document, "d_max"));
  if (c.d_min < 1 || c.d_max < c.d_min) throw ConfigError("need 1 <= d_min <= d_max");
  if (has("s0")) c.s_grid.t0 = positive(get_real(document, "s0"), "s0");
  if (has("s_ratio")) c.s_grid.ratio = get_real(document, "s_ratio");
  if (!(c.s_grid.ratio > 0 && c.s_grid.ratio < 1)) throw ConfigError("s_ratio must lie in (0, 1)");
  if (has("s_count")) c.s_grid.count = get_count(document, "s_count");
  if (has("z_nodes")) c.z_nodes = get_count(document, "z_nodes");
  if (has("z_radius")) c.z_radius = positive(get_real(document, "z_radius"), "z_radius");
  if (has("z_degree")) c.z_degree = get_count(document, "z_degree");
  if (has("xi_first")) c.xi_first = get_real(document, "xi_first");
  if (has("xi_last")) c.xi_last = get_real(document, "xi_last");
  if (has("xi_step")) c.xi_step = positive(get_real(document, "xi_step"), "xi_step");
  if (has("xi_refined_step"))
    c.xi_refined_step = positive(get_real(document, "xi_refined_step"), "xi_refined_step");
  if (!(c.xi_first > 1 && c.xi_last >= c.xi_first)) throw ConfigError("need 1 < xi_first <= xi_last");
  if (has("eps0_fraction")) c.eps0_fraction = get_real(document, "eps0_fraction");
  if (!(c.eps0_fraction > 0 && c.eps0_fraction < 1)) throw ConfigError("eps0_fraction must lie in (0, 1)");
  if (has("eps_ratio")) c.eps_ratio = get_real(document, "eps_ratio");
  if (!(c.eps_ratio > 0 && c.eps_ratio < 1)) throw ConfigError("eps_ratio must lie in (0, 1)");
  if (has("eps_count")) c.eps_count = get_count(document, "eps_count");
  if (has("targets")) {
    for (const json& p : document.at("targets")) {
      if (!p.is_array() || p.empty()) throw ConfigError("targets are arrays of coordinates");
      Point y;
      for (const json& v : p) {
        if (!v.is_number()) throw ConfigError("target coordinates must be numbers");
        y.push_back(static_cast<Real>(v.get<double>()));
      }
      c.targets.push_back(std::move(y));
    }
    if (c.targets.empty()) throw ConfigError("key 'targets' is empty");
  }
  if (has("extra_slots")) c.extra_slots = get_count(document, "extra_slots");
  if (has("alpha")) c.alpha = get_real(document, "alpha");
  if (has("terms")) c.terms = get_count(document, "terms");

  if (has("precision")) {
    c.precision = precision_from_string(get<std::string>(document, "precision"));
  } else if (precision_env && !precision_env->empty()) {
    c.precision = precision_from_string(*precision_env);
  }
  if (has("tolerance")) c.tolerance = positive(get_real(document, "tolerance"), "tolerance");
  if (has("limits")) {
    const json& limits = document.at("limits");
    if (!limits.is_object()) throw ConfigError("key 'limits' must map metric names to bounds");
    for (const auto& [name, bound] : limits.items()) {
      if (!bound.is_number()) throw ConfigError("limit '" + name + "' must be a number");
      c.limits[name] = static_cast<Real>(bound.get<double>());
    }
  }

  if (c.subcommand == "mellin-check" && c.even_profile != "bump")
    throw ConfigError("mellin-check needs a compactly supported even profile ('bump')");
  if (c.subcommand == "scal-d4")
    for (std::size_t d : c.dimensions)
      if (d != 4) throw ConfigError("scal-d4 runs in dimension 4 only");
  if (c.subcommand == "extract-offdiagonal") {
    if (c.targets.empty()) {
      for (Real t : {1.0L, -1.0L}) {
        Point y(c.dimensions.front(), 0);
        y[0] = t;
        y[1] = 0.3L;
        c.targets.push_back(y);
      }
    }
    for (const Point& y : c.targets)
      for (std::size_t d : c.dimensions)
        if (y.size() != d) throw ConfigError("target dimension does not match 'dimensions'");
  }
  return c;
}

json load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config file '" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace hlab::cli
