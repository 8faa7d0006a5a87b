#include "qgraph/cli/run_config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace qgraph {

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::text: return "text";
    case OutputFormat::csv: return "csv";
  }
  return "json";
}

OutputFormat parse_output_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "text") return OutputFormat::text;
  if (s == "csv") return OutputFormat::csv;
  throw UsageError("unknown output format '" + s + "' (expected json, text or csv)");
}

std::map<std::string, double> RunConfig::default_tolerances() {
  return {{"residual_theta", 1e-9}, {"residual_tet", 1e-8},   {"saddle", 1e-8},
          {"gradient", 1e-8},       {"lagrangian_theta", 1e-6}, {"lagrangian_tet", 1e-5},
          {"eliminate_numeric", 1e-6}, {"growth_ratio_min", 1.6}, {"growth_ratio_max", 2.4},
          {"richardson", 0.01}};
}

double RunConfig::tolerance(const std::string& name) const {
  auto it = tolerances.find(name);
  if (it == tolerances.end()) throw UsageError("unknown tolerance '" + name + "'");
  return it->second;
}

void RunConfig::validate() const {
  if (grid_max < 0) throw UsageError("grid_max must be >= 0");
  for (const auto& [k, v] : tolerances)
    if (!(v > 0)) throw UsageError("tolerance '" + k + "' must be positive");
  if (precision < 53) throw UsageError("precision must be at least 53 bits");
  if (parallelism < 1) throw UsageError("parallelism must be >= 1");
}

nlohmann::json RunConfig::to_json() const {
  return {{"grid_max", grid_max},
          {"tolerances", tolerances},
          {"seed", seed},
          {"precision", precision},
          {"output_format", to_string(output_format)},
          {"parallelism", parallelism}};
}

void RunConfig::merge(const nlohmann::json& j) {
  if (!j.is_object()) throw UsageError("configuration must be a JSON object");
  try {
    for (const auto& [k, v] : j.items()) {
      if (k == "grid_max") {
        grid_max = v.get<long>();
      } else if (k == "seed") {
        seed = v.get<std::uint64_t>();
      } else if (k == "precision") {
        precision = v.get<int>();
      } else if (k == "output_format") {
        output_format = parse_output_format(v.get<std::string>());
      } else if (k == "parallelism") {
        parallelism = v.get<unsigned>();
      } else if (k == "tolerances") {
        for (const auto& [name, t] : v.items()) {
          if (!tolerances.count(name)) throw UsageError("unknown tolerance '" + name + "'");
          tolerances[name] = t.get<double>();
        }
      } else {
        throw UsageError("unknown configuration key '" + k + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("bad configuration value: ") + e.what());
  }
  validate();
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string RunConfig::hash() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(to_json().dump())));
  return buf;
}

RunConfig load_run_config(const std::string& path) {
  RunConfig c;
  auto apply = [&](const std::string& file) {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot read configuration file '" + file + "'");
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("configuration file '" + file + "' is not valid JSON: " + e.what());
    }
    c.merge(j);
  };
  if (const char* env = std::getenv("QGRAPH_CONFIG"); env && *env) apply(env);
  if (!path.empty()) apply(path);
  c.validate();
  return c;
}

std::string version() { return QGRAPH_VERSION; }

}  // namespace qgraph
