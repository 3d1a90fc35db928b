#include "ghostarb/multiset_perm.hpp"

#include <algorithm>
#include <sstream>

namespace ghostarb {

GroupSizes::GroupSizes(std::vector<int> sizes) : sizes_(std::move(sizes)) {
  if (sizes_.empty()) {
    throw std::invalid_argument("group sizes: need at least one group");
  }
  long long total = 0;
  for (std::size_t g = 0; g < sizes_.size(); ++g) {
    if (sizes_[g] < 1) {
      std::ostringstream msg;
      msg << "group sizes: group " << g + 1 << " must have size >= 1, got "
          << sizes_[g];
      throw std::invalid_argument(msg.str());
    }
    total += sizes_[g];
  }
  if (total > kMaxTotalAuthors) {
    std::ostringstream msg;
    msg << "group sizes: combined author count " << total << " exceeds "
        << kMaxTotalAuthors;
    throw std::invalid_argument(msg.str());
  }
  total_ = static_cast<int>(total);
}

namespace {

std::string cap_message(const BigInt& count, std::int64_t cap) {
  std::ostringstream msg;
  msg << "enumeration too large: " << count
      << " distinguishable orderings exceed the cap of " << cap;
  return msg.str();
}

}  // namespace

EnumerationCapError::EnumerationCapError(BigInt count, std::int64_t cap)
    : std::runtime_error(cap_message(count, cap)),
      count_(std::move(count)),
      cap_(cap) {}

BigInt factorial(int n) {
  if (n < 0) {
    throw std::invalid_argument("factorial: argument must be >= 0");
  }
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) {
    result *= i;
  }
  return result;
}

BigInt multinomial(const std::vector<int>& parts) {
  if (parts.empty()) {
    throw std::invalid_argument("multinomial: parts must be non-empty");
  }
  long long total = 0;
  BigInt denominator = 1;
  for (int part : parts) {
    if (part < 0) {
      throw std::invalid_argument("multinomial: parts must be non-negative");
    }
    total += part;
    denominator *= factorial(part);
  }
  if (total > kMaxTotalAuthors) {
    throw std::invalid_argument("multinomial: total too large for exact accounting");
  }
  // The division is exact: the quotient counts distinguishable orderings.
  return factorial(static_cast<int>(total)) / denominator;
}

BigInt paper_quota(const GroupSizes& groups, int group) {
  if (group < 0 || group >= groups.group_count()) {
    throw std::invalid_argument("paper_quota: group index out of range");
  }
  std::vector<int> parts = groups.sizes();
  parts[group] -= 1;
  return multinomial(parts);
}

bool verify_pascal(const GroupSizes& groups) {
  BigInt quota_sum = 0;
  for (int g = 0; g < groups.group_count(); ++g) {
    quota_sum += paper_quota(groups, g);
  }
  return quota_sum == multinomial(groups.sizes());
}

void for_each_label_permutation(
    const GroupSizes& groups, std::int64_t cap,
    const std::function<void(const LabelPermutation&)>& fn) {
  BigInt count = multinomial(groups.sizes());
  if (count > cap) {
    throw EnumerationCapError(std::move(count), cap);
  }
  LabelPermutation slots;
  slots.reserve(groups.total_authors());
  for (int g = 0; g < groups.group_count(); ++g) {
    slots.insert(slots.end(), groups.size_of(g), g);
  }
  // Starting from the sorted sequence, next_permutation walks exactly the
  // distinguishable orderings in lexicographic order.
  do {
    fn(slots);
  } while (std::next_permutation(slots.begin(), slots.end()));
}

std::vector<LabelPermutation> enumerate_label_permutations(
    const GroupSizes& groups, std::int64_t cap) {
  std::vector<LabelPermutation> out;
  for_each_label_permutation(groups, cap,
                             [&out](const LabelPermutation& p) { out.push_back(p); });
  return out;
}

BigInt position_occupancy(const GroupSizes& groups, int group, int position,
                          std::int64_t cap) {
  if (group < 0 || group >= groups.group_count()) {
    throw std::invalid_argument("position_occupancy: group index out of range");
  }
  if (position < 0 || position >= groups.total_authors()) {
    throw std::invalid_argument("position_occupancy: position out of range");
  }
  BigInt count = 0;
  for_each_label_permutation(groups, cap, [&](const LabelPermutation& p) {
    if (p[position] == group) {
      ++count;
    }
  });
  return count;
}

}  // namespace ghostarb
