#include "ghostarb/arbitrage.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace ghostarb {

namespace {

// Compensated summation; ledger sums must not drift past the tolerance even
// over tens of thousands of slots. Fixed ascending order keeps runs
// reproducible.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    double y = x - carry;
    double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

void validate_groups(const std::vector<GroupProfile>& groups) {
  if (groups.empty()) {
    throw std::invalid_argument("scenario: at least one group required");
  }
  std::unordered_set<std::string> ids;
  std::unordered_map<std::string, std::string> member_owner;
  for (const GroupProfile& group : groups) {
    if (group.id.empty()) {
      throw std::invalid_argument("scenario: group id must be non-empty");
    }
    if (!ids.insert(group.id).second) {
      throw std::invalid_argument("scenario: duplicate group id '" + group.id + "'");
    }
    if (group.members.empty()) {
      throw std::invalid_argument("scenario: group '" + group.id + "' has no members");
    }
    for (const std::string& member : group.members) {
      if (member.empty()) {
        throw std::invalid_argument("scenario: group '" + group.id +
                                    "' has an empty member id");
      }
      auto [it, inserted] = member_owner.emplace(member, group.id);
      if (!inserted) {
        if (it->second == group.id) {
          throw std::invalid_argument("scenario: member '" + member +
                                      "' listed twice in group '" + group.id + "'");
        }
        throw std::invalid_argument("scenario: member '" + member +
                                    "' appears in groups '" + it->second +
                                    "' and '" + group.id + "'");
      }
    }
  }
}

GroupSizes sizes_of(const std::vector<GroupProfile>& groups) {
  std::vector<int> sizes;
  sizes.reserve(groups.size());
  for (const GroupProfile& group : groups) {
    sizes.push_back(group.size());
  }
  return GroupSizes(std::move(sizes));
}

std::string to_string(PlanVariant variant) {
  switch (variant) {
    case PlanVariant::kLemma: return "lemma";
    case PlanVariant::kFactorial: return "factorial";
    case PlanVariant::kFullCollusion: return "full-collusion";
  }
  throw std::logic_error("unreachable plan variant");
}

PlanVariant parse_variant(const std::string& text) {
  if (text == "lemma") return PlanVariant::kLemma;
  if (text == "factorial") return PlanVariant::kFactorial;
  if (text == "full-collusion") return PlanVariant::kFullCollusion;
  throw std::invalid_argument("unknown variant '" + text +
                              "'; known: lemma, factorial, full-collusion");
}

std::string to_string(AssignmentPolicy policy) {
  switch (policy) {
    case AssignmentPolicy::kRoundRobin: return "round-robin";
    case AssignmentPolicy::kFirstMember: return "first-member";
  }
  throw std::logic_error("unreachable assignment policy");
}

AssignmentPolicy parse_policy(const std::string& text) {
  if (text == "round-robin") return AssignmentPolicy::kRoundRobin;
  if (text == "first-member") return AssignmentPolicy::kFirstMember;
  throw std::invalid_argument("unknown policy '" + text +
                              "'; known: round-robin, first-member");
}

ExchangePlan build_exchange_plan(const std::vector<GroupProfile>& groups,
                                 std::int64_t cap) {
  validate_groups(groups);
  ExchangePlan plan;
  plan.variant = PlanVariant::kLemma;
  plan.papers = enumerate_label_permutations(sizes_of(groups), cap);
  return plan;
}

ExchangePlan build_factorial_plan(const std::vector<GroupProfile>& groups,
                                  std::int64_t cap) {
  validate_groups(groups);
  GroupSizes sizes = sizes_of(groups);
  int n = sizes.total_authors();
  BigInt count = factorial(n);
  if (count > cap) {
    throw EnumerationCapError(std::move(count), cap);
  }

  // Canonical member order: groups in scenario order, rosters as given.
  std::vector<std::string> member_names;
  std::vector<int> member_group;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (const std::string& member : groups[g].members) {
      member_names.push_back(member);
      member_group.push_back(static_cast<int>(g));
    }
  }

  ExchangePlan plan;
  plan.variant = PlanVariant::kFactorial;
  plan.member_assignment.emplace();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  do {
    LabelPermutation labels(n);
    std::vector<std::string> row(n);
    for (int slot = 0; slot < n; ++slot) {
      labels[slot] = member_group[order[slot]];
      row[slot] = member_names[order[slot]];
    }
    plan.papers.push_back(std::move(labels));
    plan.member_assignment->push_back(std::move(row));
  } while (std::next_permutation(order.begin(), order.end()));
  return plan;
}

ExchangePlan build_full_collusion_plan(const std::vector<GroupProfile>& groups) {
  validate_groups(groups);
  int m = static_cast<int>(groups.size());
  ExchangePlan plan;
  plan.variant = PlanVariant::kFullCollusion;
  for (int origin = 0; origin < m; ++origin) {
    LabelPermutation labels;
    labels.insert(labels.end(), groups[origin].size(), origin);
    for (int other = 0; other < m; ++other) {
      if (other == origin) continue;
      labels.insert(labels.end(), groups[other].size(), other);
    }
    plan.papers.push_back(std::move(labels));
  }
  return plan;
}

std::vector<BigInt> variant_quotas(const std::vector<GroupProfile>& groups,
                                   PlanVariant variant) {
  validate_groups(groups);
  GroupSizes sizes = sizes_of(groups);
  std::vector<BigInt> quotas;
  quotas.reserve(groups.size());
  switch (variant) {
    case PlanVariant::kLemma:
      for (int g = 0; g < sizes.group_count(); ++g) {
        quotas.push_back(paper_quota(sizes, g));
      }
      break;
    case PlanVariant::kFactorial: {
      BigInt base = factorial(sizes.total_authors() - 1);
      for (int g = 0; g < sizes.group_count(); ++g) {
        quotas.push_back(base * sizes.size_of(g));
      }
      break;
    }
    case PlanVariant::kFullCollusion:
      quotas.assign(groups.size(), BigInt(1));
      break;
  }
  return quotas;
}

BigInt variant_paper_count(const std::vector<GroupProfile>& groups,
                           PlanVariant variant) {
  GroupSizes sizes = sizes_of(groups);
  switch (variant) {
    case PlanVariant::kLemma: return multinomial(sizes.sizes());
    case PlanVariant::kFactorial: return factorial(sizes.total_authors());
    case PlanVariant::kFullCollusion: return BigInt(groups.size());
  }
  throw std::logic_error("unreachable plan variant");
}

std::vector<double> honest_ledger(const std::vector<GroupProfile>& groups,
                                  const CreditScheme& scheme,
                                  const std::vector<BigInt>& quotas) {
  if (quotas.size() != groups.size()) {
    throw std::invalid_argument("honest ledger: one quota per group required");
  }
  std::vector<double> credit;
  credit.reserve(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    // Quotas stay exact until this final multiply; quotas beyond 2^53 lose
    // precision here when the scheme's credits are non-integral.
    credit.push_back(quotas[g].convert_to<double>() *
                     scheme.total_credit(groups[g].size()));
  }
  return credit;
}

namespace {

// Positional credit of `target` across the full-collusion papers, derived
// from the fixed layout (origin group first, the rest in scenario order)
// without touching a constructed plan.
double full_collusion_positional_credit(const std::vector<GroupProfile>& groups,
                                        const CreditScheme& scheme, int target,
                                        int n) {
  int m = static_cast<int>(groups.size());
  KahanSum sum;
  for (int origin = 0; origin < m; ++origin) {
    int offset = 0;
    auto visit = [&](int g) {
      if (g == target) {
        for (int s = 0; s < groups[g].size(); ++s) {
          sum.add(scheme.position_share(offset + s + 1, n));
        }
      }
      offset += groups[g].size();
    };
    visit(origin);
    for (int other = 0; other < m; ++other) {
      if (other != origin) visit(other);
    }
  }
  return sum.sum;
}

}  // namespace

CreditLedger closed_form_ledger(const std::vector<GroupProfile>& groups,
                                const CreditScheme& scheme,
                                PlanVariant variant) {
  validate_groups(groups);
  GroupSizes sizes = sizes_of(groups);
  int n = sizes.total_authors();
  std::vector<BigInt> quotas = variant_quotas(groups, variant);
  std::vector<double> honest = honest_ledger(groups, scheme, quotas);

  CreditLedger ledger;
  KahanSum total_honest;
  KahanSum total_exchange;
  KahanSum total_gain;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    GroupLedgerEntry entry;
    entry.group_id = groups[g].id;
    entry.quota = quotas[g];
    entry.honest_credit = honest[g];
    entry.exchange_closed_form =
        variant == PlanVariant::kFullCollusion
            ? full_collusion_positional_credit(groups, scheme,
                                               static_cast<int>(g), n)
            : quotas[g].convert_to<double>() * scheme.total_credit(n);
    entry.gain = entry.exchange_closed_form - entry.honest_credit;
    total_honest.add(entry.honest_credit);
    total_exchange.add(entry.exchange_closed_form);
    total_gain.add(entry.gain);
    ledger.groups.push_back(std::move(entry));
  }
  ledger.total_honest = total_honest.sum;
  ledger.total_exchange = total_exchange.sum;
  ledger.total_gain = total_gain.sum;
  return ledger;
}

CreditLedger exchange_ledger(const ExchangePlan& plan,
                             const std::vector<GroupProfile>& groups,
                             const CreditScheme& scheme, double tol) {
  CreditLedger ledger = closed_form_ledger(groups, scheme, plan.variant);
  int n = sizes_of(groups).total_authors();
  int m = static_cast<int>(groups.size());

  std::vector<KahanSum> brute(m);
  for (const LabelPermutation& paper : plan.papers) {
    if (static_cast<int>(paper.size()) != n) {
      throw InternalConsistencyError("exchange ledger: paper width differs from author count");
    }
    for (int slot = 0; slot < n; ++slot) {
      int g = paper[slot];
      if (g < 0 || g >= m) {
        throw InternalConsistencyError("exchange ledger: slot labeled with unknown group");
      }
      brute[g].add(scheme.position_share(slot + 1, n));
    }
  }

  for (int g = 0; g < m; ++g) {
    GroupLedgerEntry& entry = ledger.groups[g];
    entry.exchange_brute_force = brute[g].sum;
    double diff = std::abs(entry.exchange_closed_form - brute[g].sum);
    if (diff > tol) {
      std::ostringstream msg;
      msg << "exchange ledger: group '" << entry.group_id
          << "' closed form " << entry.exchange_closed_form
          << " and brute force " << brute[g].sum << " disagree by " << diff;
      throw InternalConsistencyError(msg.str());
    }
  }
  return ledger;
}

namespace {

// Cheap enforcement of the ledger preconditions at exactly the author counts
// a scenario touches: shares must be non-negative and sum to the total.
void require_scheme_sane_at(const CreditScheme& scheme, int n, double tol) {
  double total = scheme.total_credit(n);
  KahanSum share_sum;
  for (int position = 1; position <= n; ++position) {
    double share = scheme.position_share(position, n);
    if (share < 0.0) {
      std::ostringstream msg;
      msg << "scheme '" << scheme.name() << "': negative share at position "
          << position << " of " << n;
      throw std::invalid_argument(msg.str());
    }
    share_sum.add(share);
  }
  if (std::abs(share_sum.sum - total) > tol) {
    std::ostringstream msg;
    msg << "scheme '" << scheme.name() << "': shares at n = " << n
        << " sum to " << share_sum.sum << ", expected " << total;
    throw std::invalid_argument(msg.str());
  }
}

std::vector<int> monotonicity_violations_up_to(const CreditScheme& scheme,
                                               int n) {
  std::vector<int> violations;
  for (int a = 1; a + 1 <= n; ++a) {
    if (scheme.total_credit(a) >= scheme.total_credit(a + 1)) {
      violations.push_back(a);
    }
  }
  return violations;
}

}  // namespace

PropositionReport verify_proposition(const ExchangePlan& plan,
                                     const std::vector<GroupProfile>& groups,
                                     const CreditScheme& scheme, double tol) {
  validate_groups(groups);
  GroupSizes sizes = sizes_of(groups);
  int n = sizes.total_authors();
  require_scheme_sane_at(scheme, n, tol);
  for (const GroupProfile& group : groups) {
    require_scheme_sane_at(scheme, group.size(), tol);
  }

  PropositionReport report;
  report.variant = plan.variant;
  report.monotonicity_violations = monotonicity_violations_up_to(scheme, n);
  report.monotone_totals = report.monotonicity_violations.empty();
  report.ledger = exchange_ledger(plan, groups, scheme, tol);

  // Full collusion gains are reported, never asserted: the construction's
  // strict-gain guarantee covers the lemma and factorial plans.
  report.positivity_asserted = plan.variant != PlanVariant::kFullCollusion &&
                               report.monotone_totals && groups.size() >= 2;
  report.all_gains_positive = true;
  for (const GroupLedgerEntry& entry : report.ledger.groups) {
    if (!(entry.gain > 0.0)) {
      report.all_gains_positive = false;
      report.non_gaining_groups.push_back(entry.group_id);
    }
  }
  if (report.positivity_asserted && !report.all_gains_positive) {
    std::ostringstream msg;
    msg << "proposition: monotone totals hold up to n = " << n
        << " yet group '" << report.non_gaining_groups.front()
        << "' fails to gain";
    throw InternalConsistencyError(msg.str());
  }
  return report;
}

PropositionReport verify_proposition(const std::vector<GroupProfile>& groups,
                                     const CreditScheme& scheme,
                                     PlanVariant variant, std::int64_t cap,
                                     double tol) {
  ExchangePlan plan;
  switch (variant) {
    case PlanVariant::kLemma:
      plan = build_exchange_plan(groups, cap);
      break;
    case PlanVariant::kFactorial:
      plan = build_factorial_plan(groups, cap);
      break;
    case PlanVariant::kFullCollusion:
      plan = build_full_collusion_plan(groups);
      break;
  }
  return verify_proposition(plan, groups, scheme, tol);
}

ExchangePlan assign_members(const ExchangePlan& plan,
                            const std::vector<GroupProfile>& groups,
                            AssignmentPolicy policy) {
  validate_groups(groups);
  if (plan.member_assignment.has_value()) {
    throw std::invalid_argument("assign members: plan already carries members");
  }
  int m = static_cast<int>(groups.size());
  ExchangePlan assigned = plan;
  assigned.member_assignment.emplace();
  assigned.member_assignment->reserve(plan.papers.size());
  std::vector<std::size_t> cursor(m, 0);
  for (const LabelPermutation& paper : plan.papers) {
    std::vector<std::string> row;
    row.reserve(paper.size());
    for (int g : paper) {
      if (g < 0 || g >= m) {
        throw std::invalid_argument("assign members: slot labeled with unknown group");
      }
      const std::vector<std::string>& roster = groups[g].members;
      switch (policy) {
        case AssignmentPolicy::kRoundRobin:
          row.push_back(roster[cursor[g]]);
          cursor[g] = (cursor[g] + 1) % roster.size();
          break;
        case AssignmentPolicy::kFirstMember:
          row.push_back(roster.front());
          break;
      }
    }
    assigned.member_assignment->push_back(std::move(row));
  }
  return assigned;
}

std::map<std::string, double> per_member_credit(
    const ExchangePlan& plan, const std::vector<GroupProfile>& groups,
    const CreditScheme& scheme) {
  validate_groups(groups);
  if (!plan.member_assignment.has_value()) {
    throw std::invalid_argument("per-member credit: plan has unassigned slots");
  }
  if (plan.member_assignment->size() != plan.papers.size()) {
    throw std::invalid_argument("per-member credit: assignment rows do not match papers");
  }
  std::unordered_map<std::string, int> owner;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (const std::string& member : groups[g].members) {
      owner.emplace(member, static_cast<int>(g));
    }
  }
  int n = sizes_of(groups).total_authors();

  std::map<std::string, KahanSum> credit;
  for (std::size_t paper = 0; paper < plan.papers.size(); ++paper) {
    const LabelPermutation& labels = plan.papers[paper];
    const std::vector<std::string>& row = (*plan.member_assignment)[paper];
    if (row.size() != labels.size() || static_cast<int>(labels.size()) != n) {
      throw std::invalid_argument("per-member credit: malformed paper row");
    }
    for (int slot = 0; slot < n; ++slot) {
      auto it = owner.find(row[slot]);
      if (it == owner.end() || it->second != labels[slot]) {
        throw std::invalid_argument("per-member credit: member '" + row[slot] +
                                    "' does not belong to the slot's group");
      }
      credit[row[slot]].add(scheme.position_share(slot + 1, n));
    }
  }

  std::map<std::string, double> out;
  for (const auto& [member, sum] : credit) {
    out.emplace(member, sum.sum);
  }
  return out;
}

}  // namespace ghostarb
