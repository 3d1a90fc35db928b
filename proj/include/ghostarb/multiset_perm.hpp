#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ghostarb {

// Quotas and permutation counts grow factorially; exact arbitrary-precision
// arithmetic is required, silent wraparound is not acceptable.
using BigInt = boost::multiprecision::cpp_int;

inline constexpr std::int64_t kDefaultEnumerationCap = 100000;

// Upper bound on the combined author count for exact accounting. Keeps
// factorial sizes to something a desk run can compute.
inline constexpr int kMaxTotalAuthors = 10000;

// Ordered group sizes (n_1, ..., n_m); every size >= 1, at least one group.
class GroupSizes {
 public:
  explicit GroupSizes(std::vector<int> sizes);

  const std::vector<int>& sizes() const { return sizes_; }
  int group_count() const { return static_cast<int>(sizes_.size()); }
  int total_authors() const { return total_; }
  int size_of(int group) const { return sizes_.at(group); }

 private:
  std::vector<int> sizes_;
  int total_ = 0;
};

// One author ordering: slot -> group index (0-based). Group g occurs exactly
// sizes[g] times.
using LabelPermutation = std::vector<int>;

// Thrown when an enumeration would exceed the configured cap. Counting
// operations stay exact beyond the cap; only materializing the orderings is
// refused.
class EnumerationCapError : public std::runtime_error {
 public:
  EnumerationCapError(BigInt count, std::int64_t cap);

  const BigInt& count() const { return count_; }
  std::int64_t cap() const { return cap_; }

 private:
  BigInt count_;
  std::int64_t cap_;
};

BigInt factorial(int n);

// (sum parts)! / prod(parts[j]!), exact. Parts must be non-empty and
// non-negative.
BigInt multinomial(const std::vector<int>& parts);

// Number of orderings that pin one slot to `group`: the multinomial over the
// sizes with that group's count decremented by one.
BigInt paper_quota(const GroupSizes& groups, int group);

// multinomial(sizes) == sum of paper_quota over all groups. A false return
// signals an implementation bug.
bool verify_pascal(const GroupSizes& groups);

// Calls fn with every distinguishable ordering of the group labels, in
// strictly increasing lexicographic order. Single-consumer stream; throws
// EnumerationCapError when multinomial(sizes) > cap.
void for_each_label_permutation(
    const GroupSizes& groups, std::int64_t cap,
    const std::function<void(const LabelPermutation&)>& fn);

std::vector<LabelPermutation> enumerate_label_permutations(
    const GroupSizes& groups, std::int64_t cap = kDefaultEnumerationCap);

// Counts orderings whose slot `position` (0-based) holds `group`. Equals
// paper_quota(groups, group) for every position.
BigInt position_occupancy(const GroupSizes& groups, int group, int position,
                          std::int64_t cap = kDefaultEnumerationCap);

}  // namespace ghostarb
