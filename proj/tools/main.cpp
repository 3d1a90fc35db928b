#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ghostarb/scenario.hpp"

namespace {

using ghostarb::ScenarioConfig;

// Flag values land here; only flags the user actually passed override the
// config file, so file values survive unless overridden.
struct CommonFlags {
  std::string groups;
  std::string scheme;
  std::string variant;
  std::string policy;
  std::string format;
  std::int64_t cap = 0;
  double tol = 0.0;
  int n_max = 0;

  CLI::Option* groups_opt = nullptr;
  CLI::Option* scheme_opt = nullptr;
  CLI::Option* variant_opt = nullptr;
  CLI::Option* policy_opt = nullptr;
  CLI::Option* format_opt = nullptr;
  CLI::Option* cap_opt = nullptr;
  CLI::Option* tol_opt = nullptr;
  CLI::Option* n_max_opt = nullptr;

  void attach(CLI::App* cmd) {
    groups_opt = cmd->add_option(
        "--groups", groups,
        "group sizes like 2,2,1 (ids g1..gm) or a JSON config path");
    scheme_opt = cmd->add_option(
        "--scheme", scheme,
        "credit scheme: total-counting, fractional-counting, first-author, "
        "power:<alpha>");
    variant_opt = cmd->add_option("--variant", variant,
                                  "plan variant: lemma, factorial, full-collusion");
    policy_opt = cmd->add_option("--policy", policy,
                                 "member assignment: round-robin, first-member");
    format_opt = cmd->add_option("--format", format, "output: table, csv, json");
    cap_opt = cmd->add_option("--cap", cap, "enumeration cap (papers)")
                  ->check(CLI::PositiveNumber);
    tol_opt = cmd->add_option("--tol", tol, "accounting tolerance")
                  ->check(CLI::NonNegativeNumber);
    n_max_opt = cmd->add_option("--n-max", n_max, "largest author count audited")
                    ->check(CLI::PositiveNumber);
  }

  ScenarioConfig to_config() const {
    ScenarioConfig config;
    if (groups_opt->count() > 0) {
      std::vector<int> sizes;
      if (ghostarb::parse_sizes_list(groups, sizes)) {
        config.groups = ghostarb::specs_from_sizes(sizes);
      } else {
        config = ghostarb::load_config_file(groups);
      }
    }
    if (scheme_opt->count() > 0) config.scheme = scheme;
    if (variant_opt->count() > 0) config.variant = variant;
    if (policy_opt->count() > 0) config.policy = policy;
    if (format_opt->count() > 0) config.output_format = format;
    if (cap_opt->count() > 0) config.enumeration_cap = cap;
    if (tol_opt->count() > 0) config.tolerance = tol;
    if (n_max_opt->count() > 0) config.n_max_audit = n_max;
    return config;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "ghostarb: audits author-credit schemes and builds the ghost-author "
      "exchange plans that raise every group's credit under them"};
  app.require_subcommand(1);

  CLI::App* audit_cmd =
      app.add_subcommand("audit", "check a scheme's accounting properties");
  CommonFlags audit_flags;
  audit_flags.attach(audit_cmd);

  CLI::App* plan_cmd = app.add_subcommand(
      "plan", "build an exchange plan and the honest/exchange ledgers");
  CommonFlags plan_flags;
  plan_flags.attach(plan_cmd);

  CLI::App* disincentive_cmd = app.add_subcommand(
      "disincentive", "check whether one added ghost author ever pays");
  CommonFlags disincentive_flags;
  disincentive_flags.attach(disincentive_cmd);

  CLI::App* schemes_cmd =
      app.add_subcommand("schemes", "built-in credit schemes");
  schemes_cmd->require_subcommand(1);
  CLI::App* schemes_list_cmd =
      schemes_cmd->add_subcommand("list", "list built-in credit schemes");
  std::string schemes_format = "table";
  schemes_list_cmd->add_option("--format", schemes_format,
                               "output: table, csv, json");

  CLI11_PARSE(app, argc, argv);

  try {
    ghostarb::RunResult result;
    if (*audit_cmd) {
      result = ghostarb::run_audit(audit_flags.to_config());
    } else if (*plan_cmd) {
      result = ghostarb::run_plan(plan_flags.to_config());
    } else if (*disincentive_cmd) {
      result = ghostarb::run_disincentive(disincentive_flags.to_config());
    } else {
      result = ghostarb::run_scheme_list(schemes_format);
    }
    std::fputs(result.output.c_str(), stdout);
    return result.exit_code;
  } catch (const ghostarb::InternalConsistencyError& e) {
    std::cerr << "internal consistency error: " << e.what() << "\n";
    return 2;
  } catch (const ghostarb::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ghostarb::EnumerationCapError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
