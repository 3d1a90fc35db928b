#include "ghostarb/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace ghostarb {

namespace {

using OrderedJson = nlohmann::ordered_json;

constexpr std::size_t kTableViolationPreview = 5;

// RFC 4180: CRLF rows, quote fields containing commas, quotes or breaks.
std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\r\n") == std::string::npos) {
    return value;
  }
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string row;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) row += ',';
    row += csv_field(fields[i]);
  }
  row += "\r\n";
  return row;
}

// Column-aligned rows, two-space gutters, first row is the header.
std::string table(const std::vector<std::vector<std::string>>& rows,
                  const std::string& indent = "  ") {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    if (row.size() > widths.size()) widths.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) {
      widths[i] = std::max(widths[i], row[i].size());
    }
  }
  std::string out;
  for (const auto& row : rows) {
    out += indent;
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += row[i];
      if (i + 1 < row.size()) {
        out.append(widths[i] - row[i].size() + 2, ' ');
      }
    }
    out += '\n';
  }
  return out;
}

std::string join_ints(const std::vector<int>& values, std::size_t limit) {
  std::ostringstream out;
  for (std::size_t i = 0; i < values.size() && i < limit; ++i) {
    if (i > 0) out << ", ";
    out << values[i];
  }
  if (values.size() > limit) out << ", ...";
  return out.str();
}

std::string violation_text(const DisincentiveViolation& v) {
  std::ostringstream out;
  out << "(position " << v.position << " -> " << v.position + v.shift
      << " at n " << v.n << ")";
  return out.str();
}

std::string json_dump(const OrderedJson& j) { return j.dump(2) + "\n"; }

// Reals pass through the 9-significant-digit rendering before entering JSON,
// so every format reports the same value.
double json_real(double value) { return std::stod(format_real(value)); }

OrderedJson ledger_json(const CreditLedger& ledger) {
  OrderedJson groups = OrderedJson::array();
  for (const GroupLedgerEntry& entry : ledger.groups) {
    OrderedJson g;
    g["id"] = entry.group_id;
    g["quota"] = entry.quota.str();
    g["honest"] = json_real(entry.honest_credit);
    g["exchange_closed_form"] = json_real(entry.exchange_closed_form);
    if (entry.exchange_brute_force.has_value()) {
      g["exchange_brute_force"] = json_real(*entry.exchange_brute_force);
    } else {
      g["exchange_brute_force"] = nullptr;
    }
    g["gain"] = json_real(entry.gain);
    groups.push_back(std::move(g));
  }
  OrderedJson j;
  j["groups"] = std::move(groups);
  j["totals"] = {{"honest", json_real(ledger.total_honest)},
                 {"exchange", json_real(ledger.total_exchange)},
                 {"gain", json_real(ledger.total_gain)}};
  return j;
}

std::string optional_real(const std::optional<double>& value) {
  return value.has_value() ? format_real(*value) : std::string();
}

}  // namespace

OutputFormat parse_format(const std::string& text) {
  if (text == "table") return OutputFormat::kTable;
  if (text == "csv") return OutputFormat::kCsv;
  if (text == "json") return OutputFormat::kJson;
  throw std::invalid_argument("unknown output format '" + text +
                              "'; known: table, csv, json");
}

std::string format_real(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", value);
  return buf;
}

std::string render_audit(const SchemeAudit& audit, OutputFormat format) {
  struct CheckRow {
    const char* name;
    bool ok;
    std::string violations_preview;
    std::size_t violation_count;
    OrderedJson violations_json;
  };

  std::vector<CheckRow> checks;
  checks.push_back({"additivity", audit.additivity_ok,
                    join_ints(audit.additivity_violations, kTableViolationPreview),
                    audit.additivity_violations.size(),
                    OrderedJson(audit.additivity_violations)});
  {
    OrderedJson v = OrderedJson::array();
    std::ostringstream preview;
    for (std::size_t i = 0; i < audit.nonnegativity_violations.size(); ++i) {
      const auto& [position, n] = audit.nonnegativity_violations[i];
      v.push_back({{"position", position}, {"n", n}});
      if (i < kTableViolationPreview) {
        if (i > 0) preview << ", ";
        preview << "(position " << position << " at n " << n << ")";
      }
    }
    if (audit.nonnegativity_violations.size() > kTableViolationPreview) {
      preview << ", ...";
    }
    checks.push_back({"non-negativity", audit.nonnegativity_ok, preview.str(),
                      audit.nonnegativity_violations.size(), std::move(v)});
  }
  checks.push_back({"total-monotonicity", audit.monotonicity_ok,
                    join_ints(audit.monotonicity_violations, kTableViolationPreview),
                    audit.monotonicity_violations.size(),
                    OrderedJson(audit.monotonicity_violations)});
  {
    OrderedJson v = OrderedJson::array();
    std::ostringstream preview;
    for (std::size_t i = 0; i < audit.disincentive_violations.size(); ++i) {
      const DisincentiveViolation& dv = audit.disincentive_violations[i];
      v.push_back({{"position", dv.position}, {"shift", dv.shift}, {"n", dv.n}});
      if (i < kTableViolationPreview) {
        if (i > 0) preview << ", ";
        preview << violation_text(dv);
      }
    }
    if (audit.disincentive_violations.size() > kTableViolationPreview) {
      preview << ", ...";
    }
    checks.push_back({"single-paper-disincentive", audit.disincentive_ok,
                      preview.str(), audit.disincentive_violations.size(),
                      std::move(v)});
  }

  switch (format) {
    case OutputFormat::kTable: {
      std::ostringstream out;
      out << "scheme: " << audit.scheme_name << " (n up to " << audit.n_max
          << ", tolerance " << format_real(audit.tolerance) << ")\n";
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"check", "status", "violations"});
      for (const CheckRow& check : checks) {
        std::string detail = check.ok ? "0" : std::to_string(check.violation_count);
        if (!check.ok && !check.violations_preview.empty()) {
          detail += ": " + check.violations_preview;
        }
        rows.push_back({check.name, check.ok ? "ok" : "FAIL", detail});
      }
      out << table(rows);
      return out.str();
    }
    case OutputFormat::kCsv: {
      std::string out = csv_row({"check", "ok", "violation_count"});
      for (const CheckRow& check : checks) {
        out += csv_row({check.name, check.ok ? "true" : "false",
                        std::to_string(check.violation_count)});
      }
      return out;
    }
    case OutputFormat::kJson: {
      OrderedJson j;
      j["scheme"] = audit.scheme_name;
      j["n_max"] = audit.n_max;
      j["tolerance"] = json_real(audit.tolerance);
      for (const CheckRow& check : checks) {
        std::string key = check.name;
        for (char& c : key) {
          if (c == '-') c = '_';
        }
        j[key] = {{"ok", check.ok}, {"violations", check.violations_json}};
      }
      return json_dump(j);
    }
  }
  throw std::logic_error("unreachable output format");
}

std::string render_disincentive(const DisincentiveReportData& data,
                                OutputFormat format) {
  const char* note =
      "adding one ghost author to one paper never pays under this scheme, "
      "yet reciprocal exchange plans still raise every group's credit "
      "(see the 'plan' subcommand)";
  switch (format) {
    case OutputFormat::kTable: {
      std::ostringstream out;
      out << "scheme: " << data.scheme_name << " (n up to " << data.n_max << ")\n";
      if (data.violations.empty()) {
        out << "single-paper disincentive: holds (no violations)\n";
      } else {
        out << "single-paper disincentive: FAIL (" << data.violations.size()
            << " violations)\n";
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"position", "lands-at", "n"});
        for (const DisincentiveViolation& v : data.violations) {
          rows.push_back({std::to_string(v.position),
                          std::to_string(v.position + v.shift),
                          std::to_string(v.n)});
        }
        out << table(rows);
      }
      if (data.arbitrage_note) {
        out << "note: " << note << "\n";
      }
      return out.str();
    }
    case OutputFormat::kCsv: {
      std::string out = csv_row({"position", "lands_at", "n"});
      for (const DisincentiveViolation& v : data.violations) {
        out += csv_row({std::to_string(v.position),
                        std::to_string(v.position + v.shift),
                        std::to_string(v.n)});
      }
      return out;
    }
    case OutputFormat::kJson: {
      OrderedJson j;
      j["scheme"] = data.scheme_name;
      j["n_max"] = data.n_max;
      j["holds"] = data.violations.empty();
      OrderedJson v = OrderedJson::array();
      for (const DisincentiveViolation& dv : data.violations) {
        v.push_back({{"position", dv.position}, {"shift", dv.shift}, {"n", dv.n}});
      }
      j["violations"] = std::move(v);
      if (data.arbitrage_note) {
        j["note"] = note;
      }
      return json_dump(j);
    }
  }
  throw std::logic_error("unreachable output format");
}

std::string render_plan(const PlanReportData& data, OutputFormat format) {
  switch (format) {
    case OutputFormat::kTable: {
      std::ostringstream out;
      out << "scheme: " << data.scheme_name << "\n";
      out << "variant: " << data.variant_name << "\n";
      out << "groups (m = " << data.group_count << ", n = " << data.total_authors
          << "):\n";
      {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"id", "size", "members"});
        for (const GroupProfile& group : data.groups) {
          std::string members;
          for (std::size_t i = 0; i < group.members.size(); ++i) {
            if (i > 0) members += ", ";
            members += group.members[i];
          }
          rows.push_back({group.id, std::to_string(group.size()), members});
        }
        out << table(rows);
      }
      out << "papers in plan: k = " << data.paper_count.str()
          << "; quota identity (k = sum of quotas): "
          << (data.quota_identity_ok ? "ok" : "FAIL") << "\n";
      if (!data.enumerated) {
        out << "brute-force accounting skipped: " << data.paper_count.str()
            << " papers exceed the enumeration cap of " << data.cap
            << "; ledger is closed-form only\n";
      }
      out << "ledger:\n";
      {
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"group", "quota", "honest", "exchange", "brute-force", "gain"});
        for (const GroupLedgerEntry& entry : data.ledger.groups) {
          rows.push_back({entry.group_id, entry.quota.str(),
                          format_real(entry.honest_credit),
                          format_real(entry.exchange_closed_form),
                          optional_real(entry.exchange_brute_force),
                          format_real(entry.gain)});
        }
        rows.push_back({"total", "", format_real(data.ledger.total_honest),
                        format_real(data.ledger.total_exchange), "",
                        format_real(data.ledger.total_gain)});
        out << table(rows);
      }
      if (data.monotone_totals) {
        if (data.positivity_asserted) {
          out << "verdict: every group gains (strict: totals increase with "
                 "author count up to n = "
              << data.total_authors << ")\n";
        } else if (data.all_gains_positive) {
          out << "verdict: every group gains\n";
        } else {
          out << "verdict: groups without gain:";
          for (const std::string& id : data.non_gaining_groups) out << " " << id;
          out << "\n";
        }
      } else {
        out << "verdict: totals are not strictly increasing (violations at n = "
            << join_ints(data.monotonicity_violations, kTableViolationPreview)
            << "); ";
        if (data.all_gains_positive) {
          out << "every group still gains\n";
        } else {
          out << "groups without gain:";
          for (const std::string& id : data.non_gaining_groups) out << " " << id;
          out << "\n";
        }
      }
      if (data.papers.has_value()) {
        out << "papers (policy " << data.policy_name << "):\n";
        std::vector<std::vector<std::string>> rows;
        for (std::size_t p = 0; p < data.papers->size(); ++p) {
          std::string authors;
          for (std::size_t s = 0; s < (*data.papers)[p].size(); ++s) {
            if (s > 0) authors += ", ";
            authors += (*data.papers)[p][s];
          }
          rows.push_back({std::to_string(p + 1), authors});
        }
        out << table(rows);
      } else if (data.enumerated) {
        out << "papers: " << data.paper_count.str() << " (not listed)\n";
      }
      if (data.member_credit.has_value()) {
        out << "per-member credit (policy " << data.policy_name << "):\n";
        std::vector<std::vector<std::string>> rows;
        rows.push_back({"member", "credit"});
        for (const auto& [member, credit] : *data.member_credit) {
          rows.push_back({member, format_real(credit)});
        }
        out << table(rows);
      }
      return out.str();
    }
    case OutputFormat::kCsv: {
      std::string out = csv_row({"group", "quota", "honest",
                                 "exchange_closed_form", "exchange_brute_force",
                                 "gain"});
      for (const GroupLedgerEntry& entry : data.ledger.groups) {
        out += csv_row({entry.group_id, entry.quota.str(),
                        format_real(entry.honest_credit),
                        format_real(entry.exchange_closed_form),
                        optional_real(entry.exchange_brute_force),
                        format_real(entry.gain)});
      }
      out += csv_row({"total", "", format_real(data.ledger.total_honest),
                      format_real(data.ledger.total_exchange), "",
                      format_real(data.ledger.total_gain)});
      return out;
    }
    case OutputFormat::kJson: {
      OrderedJson j;
      j["scheme"] = data.scheme_name;
      j["variant"] = data.variant_name;
      j["m"] = data.group_count;
      j["n"] = data.total_authors;
      OrderedJson groups = OrderedJson::array();
      for (const GroupProfile& group : data.groups) {
        groups.push_back({{"id", group.id},
                          {"size", group.size()},
                          {"members", group.members}});
      }
      j["groups"] = std::move(groups);
      j["k"] = data.paper_count.str();
      j["quota_identity_ok"] = data.quota_identity_ok;
      j["enumerated"] = data.enumerated;
      if (!data.enumerated) {
        j["enumeration_cap"] = data.cap;
      }
      j["ledger"] = ledger_json(data.ledger);
      j["proposition"] = {
          {"monotone_totals", data.monotone_totals},
          {"monotonicity_violations", data.monotonicity_violations},
          {"positivity_asserted", data.positivity_asserted},
          {"all_gains_positive", data.all_gains_positive},
          {"non_gaining_groups", data.non_gaining_groups}};
      if (data.papers.has_value()) {
        j["policy"] = data.policy_name;
        j["papers"] = *data.papers;
      }
      if (data.member_credit.has_value()) {
        OrderedJson credit;
        for (const auto& [member, value] : *data.member_credit) {
          credit[member] = json_real(value);
        }
        j["per_member_credit"] = std::move(credit);
      }
      return json_dump(j);
    }
  }
  throw std::logic_error("unreachable output format");
}

std::string render_scheme_list(const std::vector<SchemeInfo>& schemes,
                               OutputFormat format) {
  switch (format) {
    case OutputFormat::kTable: {
      std::vector<std::vector<std::string>> rows;
      rows.push_back({"name", "summary"});
      for (const SchemeInfo& info : schemes) {
        rows.push_back({info.name, info.summary});
      }
      return table(rows, "");
    }
    case OutputFormat::kCsv: {
      std::string out = csv_row({"name", "summary"});
      for (const SchemeInfo& info : schemes) {
        out += csv_row({info.name, info.summary});
      }
      return out;
    }
    case OutputFormat::kJson: {
      OrderedJson j = OrderedJson::array();
      for (const SchemeInfo& info : schemes) {
        j.push_back({{"name", info.name}, {"summary", info.summary}});
      }
      return json_dump(j);
    }
  }
  throw std::logic_error("unreachable output format");
}

}  // namespace ghostarb
