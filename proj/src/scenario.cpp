#include "ghostarb/scenario.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "ghostarb/report.hpp"

namespace ghostarb {

namespace {

using Json = nlohmann::json;

[[noreturn]] void config_fail(const std::string& where, const std::string& what) {
  throw ConfigError("config: " + where + ": " + what);
}

int require_positive_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 1) {
    config_fail(where, "must be a positive integer");
  }
  std::int64_t value = j.get<std::int64_t>();
  if (value > kMaxTotalAuthors) {
    config_fail(where, "exceeds the supported author count");
  }
  return static_cast<int>(value);
}

std::string require_string(const Json& j, const std::string& where) {
  if (!j.is_string()) {
    config_fail(where, "must be a string");
  }
  return j.get<std::string>();
}

GroupSpec parse_group_spec(const Json& j, const std::string& where) {
  if (!j.is_object()) {
    config_fail(where, "must be an object with id and members or size");
  }
  GroupSpec spec;
  for (const auto& [key, value] : j.items()) {
    if (key == "id") {
      spec.id = require_string(value, where + ".id");
    } else if (key == "members") {
      if (!value.is_array() || value.empty()) {
        config_fail(where + ".members", "must be a non-empty array of strings");
      }
      for (std::size_t i = 0; i < value.size(); ++i) {
        spec.members.push_back(require_string(
            value[i], where + ".members[" + std::to_string(i) + "]"));
      }
    } else if (key == "size") {
      spec.size = require_positive_int(value, where + ".size");
    } else {
      config_fail(where + "." + key, "unknown field");
    }
  }
  if (spec.id.empty()) {
    config_fail(where, "missing id");
  }
  if (spec.members.empty() && spec.size == 0) {
    config_fail(where, "needs members or size");
  }
  return spec;
}

}  // namespace

ScenarioConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("config: cannot open '" + path + "'");
  }
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError("config: " + path + ": " + e.what());
  }
  if (!j.is_object()) {
    throw ConfigError("config: " + path + ": top level must be an object");
  }

  ScenarioConfig config;
  for (const auto& [key, value] : j.items()) {
    if (key == "groups") {
      if (!value.is_array() || value.empty()) {
        config_fail("groups", "must be a non-empty array");
      }
      for (std::size_t i = 0; i < value.size(); ++i) {
        config.groups.push_back(
            parse_group_spec(value[i], "groups[" + std::to_string(i) + "]"));
      }
    } else if (key == "scheme") {
      config.scheme = require_string(value, "scheme");
    } else if (key == "variant") {
      config.variant = require_string(value, "variant");
    } else if (key == "policy") {
      config.policy = require_string(value, "policy");
    } else if (key == "n_max_audit") {
      config.n_max_audit = require_positive_int(value, "n_max_audit");
    } else if (key == "enumeration_cap") {
      if (!value.is_number_integer() || value.get<std::int64_t>() < 1) {
        config_fail("enumeration_cap", "must be a positive integer");
      }
      config.enumeration_cap = value.get<std::int64_t>();
    } else if (key == "tolerance") {
      if (!value.is_number() || !(value.get<double>() >= 0.0)) {
        config_fail("tolerance", "must be a non-negative number");
      }
      config.tolerance = value.get<double>();
    } else if (key == "output_format") {
      config.output_format = require_string(value, "output_format");
    } else {
      config_fail(key, "unknown field");
    }
  }
  return config;
}

bool parse_sizes_list(const std::string& text, std::vector<int>& out) {
  out.clear();
  if (text.empty()) return false;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string token = text.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    if (token.empty() || token.size() > 6) return false;
    for (char c : token) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    int value = std::stoi(token);
    if (value < 1) return false;
    out.push_back(value);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return !out.empty();
}

std::vector<GroupSpec> specs_from_sizes(const std::vector<int>& sizes) {
  std::vector<GroupSpec> specs;
  specs.reserve(sizes.size());
  for (std::size_t g = 0; g < sizes.size(); ++g) {
    GroupSpec spec;
    spec.id = "g" + std::to_string(g + 1);
    spec.size = sizes[g];
    specs.push_back(std::move(spec));
  }
  return specs;
}

std::vector<GroupProfile> resolve_groups(const ScenarioConfig& config) {
  if (config.groups.empty()) {
    throw std::invalid_argument(
        "scenario: no groups configured; pass --groups or a config file");
  }
  std::vector<GroupProfile> groups;
  groups.reserve(config.groups.size());
  for (const GroupSpec& spec : config.groups) {
    GroupProfile profile;
    profile.id = spec.id;
    if (!spec.members.empty()) {
      if (spec.size != 0 && spec.size != static_cast<int>(spec.members.size())) {
        throw std::invalid_argument(
            "scenario: group '" + spec.id + "' declares size " +
            std::to_string(spec.size) + " but lists " +
            std::to_string(spec.members.size()) + " members");
      }
      profile.members = spec.members;
    } else {
      for (int i = 1; i <= spec.size; ++i) {
        profile.members.push_back(spec.id + "-" + std::to_string(i));
      }
    }
    groups.push_back(std::move(profile));
  }
  validate_groups(groups);
  return groups;
}

RunResult run_audit(const ScenarioConfig& config) {
  CreditScheme scheme = parse_scheme(config.scheme);
  OutputFormat format = parse_format(config.output_format);
  SchemeAudit audit =
      audit_scheme(scheme, std::max(2, config.n_max_audit), config.tolerance);
  RunResult result;
  result.output = render_audit(audit, format);
  // Monotonicity and disincentive failures are informational; broken
  // accounting (additivity, negative shares) is not.
  result.exit_code = audit.additivity_ok && audit.nonnegativity_ok ? 0 : 1;
  return result;
}

RunResult run_disincentive(const ScenarioConfig& config) {
  CreditScheme scheme = parse_scheme(config.scheme);
  OutputFormat format = parse_format(config.output_format);
  DisincentiveReportData data;
  data.scheme_name = scheme.name();
  data.n_max = std::max(1, config.n_max_audit);
  data.violations = check_single_paper_disincentive(scheme, data.n_max);
  if (data.violations.empty() && data.n_max >= 2) {
    SchemeAudit audit = audit_scheme(scheme, data.n_max, config.tolerance);
    data.arbitrage_note = audit.monotonicity_ok && audit.additivity_ok &&
                          audit.nonnegativity_ok;
  }
  RunResult result;
  result.output = render_disincentive(data, format);
  result.exit_code = 0;
  return result;
}

namespace {

constexpr std::size_t kMaxListedPapers = 100;

}  // namespace

RunResult run_plan(const ScenarioConfig& config) {
  std::vector<GroupProfile> groups = resolve_groups(config);
  CreditScheme scheme = parse_scheme(config.scheme);
  PlanVariant variant = parse_variant(config.variant);
  AssignmentPolicy policy = parse_policy(config.policy);
  OutputFormat format = parse_format(config.output_format);
  GroupSizes sizes = sizes_of(groups);

  PlanReportData data;
  data.scheme_name = scheme.name();
  data.variant_name = to_string(variant);
  data.groups = groups;
  data.total_authors = sizes.total_authors();
  data.group_count = sizes.group_count();
  data.cap = config.enumeration_cap;
  data.policy_name = to_string(policy);
  data.paper_count = variant_paper_count(groups, variant);
  {
    BigInt quota_sum = 0;
    for (const BigInt& quota : variant_quotas(groups, variant)) {
      quota_sum += quota;
    }
    data.quota_identity_ok = quota_sum == data.paper_count;
  }
  data.enumerated = data.paper_count <= config.enumeration_cap;

  if (data.enumerated) {
    ExchangePlan plan;
    switch (variant) {
      case PlanVariant::kLemma:
        plan = build_exchange_plan(groups, config.enumeration_cap);
        break;
      case PlanVariant::kFactorial:
        plan = build_factorial_plan(groups, config.enumeration_cap);
        break;
      case PlanVariant::kFullCollusion:
        plan = build_full_collusion_plan(groups);
        break;
    }
    PropositionReport report =
        verify_proposition(plan, groups, scheme, config.tolerance);
    data.ledger = report.ledger;
    data.monotone_totals = report.monotone_totals;
    data.monotonicity_violations = report.monotonicity_violations;
    data.positivity_asserted = report.positivity_asserted;
    data.all_gains_positive = report.all_gains_positive;
    data.non_gaining_groups = report.non_gaining_groups;

    ExchangePlan assigned = plan.member_assignment.has_value()
                                ? std::move(plan)
                                : assign_members(plan, groups, policy);
    if (assigned.papers.size() <= kMaxListedPapers) {
      data.papers = *assigned.member_assignment;
    }
    std::map<std::string, double> credit =
        per_member_credit(assigned, groups, scheme);
    data.member_credit.emplace();
    for (const GroupProfile& group : groups) {
      for (const std::string& member : group.members) {
        data.member_credit->emplace_back(member, credit.at(member));
      }
    }
  } else {
    data.ledger = closed_form_ledger(groups, scheme, variant);
    std::vector<int> violations;
    for (int a = 1; a + 1 <= data.total_authors; ++a) {
      if (scheme.total_credit(a) >= scheme.total_credit(a + 1)) {
        violations.push_back(a);
      }
    }
    data.monotone_totals = violations.empty();
    data.monotonicity_violations = std::move(violations);
    data.positivity_asserted = false;
    data.all_gains_positive = true;
    for (const GroupLedgerEntry& entry : data.ledger.groups) {
      if (!(entry.gain > 0.0)) {
        data.all_gains_positive = false;
        data.non_gaining_groups.push_back(entry.group_id);
      }
    }
  }

  RunResult result;
  result.output = render_plan(data, format);
  result.exit_code = 0;
  return result;
}

RunResult run_scheme_list(const std::string& output_format) {
  RunResult result;
  result.output =
      render_scheme_list(builtin_scheme_list(), parse_format(output_format));
  result.exit_code = 0;
  return result;
}

}  // namespace ghostarb
