#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

namespace qgraph {

/// Malformed command line or configuration (exit code 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class OutputFormat { json, text, csv };
std::string to_string(OutputFormat f);
/// Throws UsageError for names other than json, text and csv.
OutputFormat parse_output_format(const std::string& s);

struct RunConfig {
  long grid_max = 8;
  std::map<std::string, double> tolerances = default_tolerances();
  std::uint64_t seed = 7;
  int precision = 256;  ///< MPFR working precision in bits for growth tables
  OutputFormat output_format = OutputFormat::json;
  unsigned parallelism = 1;

  static std::map<std::string, double> default_tolerances();

  /// Throws UsageError for unknown tolerance names.
  double tolerance(const std::string& name) const;
  /// Throws UsageError unless grid_max >= 0, tolerances are positive, precision >= 53 and parallelism >= 1.
  void validate() const;

  nlohmann::json to_json() const;
  /// Overrides fields present in j. Unknown keys and unknown tolerance names raise UsageError.
  void merge(const nlohmann::json& j);
  /// 16 hex digits of FNV-1a over the canonical JSON form.
  std::string hash() const;
};

/// Defaults, then the JSON file named by QGRAPH_CONFIG (if set), then `path` (if nonempty).
RunConfig load_run_config(const std::string& path = "");

std::uint64_t fnv1a64(const std::string& bytes);

/// Library version string.
std::string version();

}  // namespace qgraph
