#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace hardy::cli {

using nlohmann::json;

/// Result of one CLI command. `exit_code` is 0 when every verdict passes, 1
/// when a test ran and failed, 2 when methods disagree. Errors surface as
/// exceptions (exit 2).
struct RunReport {
  std::string command;
  json inputs = json::object();
  json verdicts = json::object();
  json numerics = json::object();
  std::string anchor;
  json extra = json::object();
  std::string csv;  // tabular data for --csv, empty when not produced
  int exit_code = 0;

  // Sets exit_code from the verdicts.
  void finish();
  json to_json() const;
};

// Grid size from HARDY_INNER_GRID, else the library default.
int default_grid_from_env();

struct InnerTestOptions {
  std::string function;
  std::string symbol;
  std::optional<int> grid;
  int moments = 32;
  double tol = 1e-9;
  std::string method = "all";  // moment, stessin, clark, all
  int n_alpha = 256;
};

struct ClarkOptions {
  std::string source;  // Blaschke spec or "atomic"
  std::optional<std::string> alpha;
  std::optional<double> t;
  int truncation = 100;
  std::optional<std::string> integrate;
};

struct DemoOptions {
  std::string name;
  int n = 3;
  double beta = 0.75;
  int truncation = 10000;
  std::uint64_t seed = 0;
  std::optional<int> grid;
};

const std::vector<std::string>& demo_names();

RunReport cmd_inner_test(const InnerTestOptions& opts);
RunReport cmd_clark(const ClarkOptions& opts);
RunReport cmd_demo(const DemoOptions& opts);

// JSON emitted for a failed command (exit 2).
json error_report(const std::string& command, const std::string& message);

}  // namespace hardy::cli
