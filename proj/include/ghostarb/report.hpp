#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ghostarb/arbitrage.hpp"
#include "ghostarb/credit_scheme.hpp"

namespace ghostarb {

enum class OutputFormat { kTable, kCsv, kJson };
OutputFormat parse_format(const std::string& text);

// Reals are rendered with 9 significant digits in every format, so identical
// inputs produce byte-identical reports.
std::string format_real(double value);

std::string render_audit(const SchemeAudit& audit, OutputFormat format);

struct DisincentiveReportData {
  std::string scheme_name;
  int n_max = 0;
  std::vector<DisincentiveViolation> violations;
  // Set when the scheme also has monotone totals: one ghost author on one
  // paper never pays, yet exchange plans still raise every group's credit.
  bool arbitrage_note = false;
};
std::string render_disincentive(const DisincentiveReportData& data,
                                OutputFormat format);

struct PlanReportData {
  std::string scheme_name;
  std::string variant_name;
  std::vector<GroupProfile> groups;
  int total_authors = 0;  // n
  int group_count = 0;    // m
  BigInt paper_count;     // k
  bool quota_identity_ok = false;  // k == sum of quotas
  CreditLedger ledger;
  bool monotone_totals = false;
  std::vector<int> monotonicity_violations;
  bool positivity_asserted = false;
  bool all_gains_positive = false;
  std::vector<std::string> non_gaining_groups;
  bool enumerated = true;  // false: brute force skipped, closed form only
  std::int64_t cap = kDefaultEnumerationCap;
  std::string policy_name;
  // Member id per slot, present when k is small enough to list.
  std::optional<std::vector<std::vector<std::string>>> papers;
  // Scenario order (groups, then roster), when the plan was assignable.
  std::optional<std::vector<std::pair<std::string, double>>> member_credit;
};
std::string render_plan(const PlanReportData& data, OutputFormat format);

std::string render_scheme_list(const std::vector<SchemeInfo>& schemes,
                               OutputFormat format);

}  // namespace ghostarb
