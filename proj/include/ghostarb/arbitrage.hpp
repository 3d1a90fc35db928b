#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ghostarb/credit_scheme.hpp"
#include "ghostarb/multiset_perm.hpp"

namespace ghostarb {

struct GroupProfile {
  std::string id;
  std::vector<std::string> members;

  int size() const { return static_cast<int>(members.size()); }
};

// Non-empty groups, unique ids, pairwise disjoint member sets. Throws
// std::invalid_argument naming the offending id.
void validate_groups(const std::vector<GroupProfile>& groups);

GroupSizes sizes_of(const std::vector<GroupProfile>& groups);

enum class PlanVariant {
  kLemma,          // one paper per distinguishable group-label ordering
  kFactorial,      // one paper per full permutation of the member identities
  kFullCollusion,  // one paper per group, every author on every paper
};

std::string to_string(PlanVariant variant);
PlanVariant parse_variant(const std::string& text);

enum class AssignmentPolicy { kRoundRobin, kFirstMember };
std::string to_string(AssignmentPolicy policy);
AssignmentPolicy parse_policy(const std::string& text);

struct ExchangePlan {
  PlanVariant variant = PlanVariant::kLemma;
  // One row per paper; each row maps slot -> group index (0-based).
  std::vector<LabelPermutation> papers;
  // Slot -> member id, parallel to papers. Absent for slot-level plans;
  // inherent for the factorial variant.
  std::optional<std::vector<std::vector<std::string>>> member_assignment;
};

// One paper per distinguishable label ordering, lexicographic. Slot-level:
// the construction leaves the choice of member to each group.
ExchangePlan build_exchange_plan(const std::vector<GroupProfile>& groups,
                                 std::int64_t cap = kDefaultEnumerationCap);

// n! papers, one per full permutation of the member identities, lexicographic
// over the scenario member order.
ExchangePlan build_factorial_plan(const std::vector<GroupProfile>& groups,
                                  std::int64_t cap = kDefaultEnumerationCap);

// One paper per group: the originating group's members first, the remaining
// groups appended in scenario order.
ExchangePlan build_full_collusion_plan(const std::vector<GroupProfile>& groups);

// Papers contributed per group: the pinned-slot multinomial for the lemma
// variant, (n-1)! * n_i for the factorial variant, 1 for full collusion.
std::vector<BigInt> variant_quotas(const std::vector<GroupProfile>& groups,
                                   PlanVariant variant);

// Paper count of the exchange plan for the variant; exact at any scale.
BigInt variant_paper_count(const std::vector<GroupProfile>& groups,
                           PlanVariant variant);

// Baseline: each group publishes its quota of papers with only its own
// members, earning quota * total_credit(n_i).
std::vector<double> honest_ledger(const std::vector<GroupProfile>& groups,
                                  const CreditScheme& scheme,
                                  const std::vector<BigInt>& quotas);

struct GroupLedgerEntry {
  std::string group_id;
  BigInt quota;
  double honest_credit = 0.0;
  double exchange_closed_form = 0.0;
  std::optional<double> exchange_brute_force;  // absent beyond the cap
  double gain = 0.0;  // exchange_closed_form - honest_credit
};

struct CreditLedger {
  std::vector<GroupLedgerEntry> groups;
  double total_honest = 0.0;
  double total_exchange = 0.0;
  double total_gain = 0.0;
};

// Raised when two routes that must agree do not; signals a bug, not a valid
// outcome.
class InternalConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Closed-form ledger only: quota * total_credit(n) per group (positional sums
// for full collusion). Works beyond the enumeration cap.
CreditLedger closed_form_ledger(const std::vector<GroupProfile>& groups,
                                const CreditScheme& scheme,
                                PlanVariant variant);

// Both routes: the closed form above plus a brute-force sum of the share at
// every slot the group holds, in ascending paper order. Throws
// InternalConsistencyError when the routes disagree beyond tol.
CreditLedger exchange_ledger(const ExchangePlan& plan,
                             const std::vector<GroupProfile>& groups,
                             const CreditScheme& scheme,
                             double tol = kDefaultTolerance);

struct PropositionReport {
  PlanVariant variant = PlanVariant::kLemma;
  CreditLedger ledger;
  // Strictly increasing totals checked for every author count below the
  // combined count n.
  bool monotone_totals = false;
  std::vector<int> monotonicity_violations;
  // True when the construction guarantees strict gains (lemma or factorial
  // variant, at least two groups, monotone totals). With it set, any
  // non-positive gain throws InternalConsistencyError.
  bool positivity_asserted = false;
  bool all_gains_positive = false;
  std::vector<std::string> non_gaining_groups;
};

PropositionReport verify_proposition(const ExchangePlan& plan,
                                     const std::vector<GroupProfile>& groups,
                                     const CreditScheme& scheme,
                                     double tol = kDefaultTolerance);

// Convenience: builds the plan for the variant first.
PropositionReport verify_proposition(const std::vector<GroupProfile>& groups,
                                     const CreditScheme& scheme,
                                     PlanVariant variant,
                                     std::int64_t cap = kDefaultEnumerationCap,
                                     double tol = kDefaultTolerance);

// Fills every slot of a slot-level plan with a member of the slot's group.
// Round-robin cycles each group's roster across slots in paper order;
// first-member always picks the roster head. Group totals are unchanged by
// either policy.
ExchangePlan assign_members(const ExchangePlan& plan,
                            const std::vector<GroupProfile>& groups,
                            AssignmentPolicy policy);

// Credit per member over a fully assigned plan. Throws std::invalid_argument
// on unassigned plans or members outside the slot's group.
std::map<std::string, double> per_member_credit(
    const ExchangePlan& plan, const std::vector<GroupProfile>& groups,
    const CreditScheme& scheme);

}  // namespace ghostarb
