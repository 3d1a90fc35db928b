#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghostarb/arbitrage.hpp"

namespace ghostarb {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Either an explicit roster or a bare size; with a bare size, member ids are
// synthesized as <id>-1 .. <id>-size.
struct GroupSpec {
  std::string id;
  std::vector<std::string> members;
  int size = 0;
};

struct ScenarioConfig {
  std::vector<GroupSpec> groups;
  std::string scheme = "total-counting";
  std::string variant = "lemma";
  std::string policy = "round-robin";
  int n_max_audit = 10;
  std::int64_t enumeration_cap = kDefaultEnumerationCap;
  double tolerance = kDefaultTolerance;
  std::string output_format = "table";
};

// Loads a JSON config; unknown or ill-typed fields raise ConfigError with the
// field path in the message.
ScenarioConfig load_config_file(const std::string& path);

// "2,2,1" -> sizes; anything else is treated as a config file path.
bool parse_sizes_list(const std::string& text, std::vector<int>& out);

// Group specs for a bare size list: ids g1..gm.
std::vector<GroupSpec> specs_from_sizes(const std::vector<int>& sizes);

// Resolves specs to profiles (synthesizing member ids where needed) and
// validates uniqueness and disjointness.
std::vector<GroupProfile> resolve_groups(const ScenarioConfig& config);

struct RunResult {
  std::string output;
  int exit_code = 0;
};

// Subcommand drivers. Validation problems raise; the results carry only
// success/informational exit codes.
RunResult run_audit(const ScenarioConfig& config);
RunResult run_plan(const ScenarioConfig& config);
RunResult run_disincentive(const ScenarioConfig& config);
RunResult run_scheme_list(const std::string& output_format);

}  // namespace ghostarb
