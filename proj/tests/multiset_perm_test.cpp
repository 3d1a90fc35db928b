#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>

#include "ghostarb/multiset_perm.hpp"

using ghostarb::BigInt;
using ghostarb::GroupSizes;
using ghostarb::LabelPermutation;

namespace {

// Independent oracle: plain 64-bit factorial arithmetic, valid up to 20!.
std::uint64_t fact_u64(int n) {
  std::uint64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::uint64_t multinomial_u64(const std::vector<int>& parts) {
  int total = 0;
  std::uint64_t denom = 1;
  for (int p : parts) {
    total += p;
    denom *= fact_u64(p);
  }
  return fact_u64(total) / denom;
}

// Independent oracle: recursive generation over slots, deduplicated by the
// ordered set, never touching next_permutation.
void collect_orderings(std::vector<int>& counts, LabelPermutation& prefix,
                       std::set<LabelPermutation>& out, int n) {
  if (static_cast<int>(prefix.size()) == n) {
    out.insert(prefix);
    return;
  }
  for (std::size_t g = 0; g < counts.size(); ++g) {
    if (counts[g] == 0) continue;
    --counts[g];
    prefix.push_back(static_cast<int>(g));
    collect_orderings(counts, prefix, out, n);
    prefix.pop_back();
    ++counts[g];
  }
}

std::set<LabelPermutation> ordering_oracle(const std::vector<int>& sizes) {
  std::vector<int> counts = sizes;
  LabelPermutation prefix;
  std::set<LabelPermutation> out;
  int n = 0;
  for (int s : sizes) n += s;
  collect_orderings(counts, prefix, out, n);
  return out;
}

std::vector<int> random_sizes(std::mt19937& rng, int max_groups, int max_total) {
  int m = 1 + static_cast<int>(rng() % max_groups);
  int n = m + static_cast<int>(rng() % (max_total - m + 1));
  std::vector<int> sizes(m, 1);
  for (int extra = 0; extra < n - m; ++extra) {
    sizes[rng() % m] += 1;
  }
  return sizes;
}

}  // namespace

TEST_CASE("group sizes validate their invariants") {
  CHECK_THROWS_AS(GroupSizes({}), std::invalid_argument);
  CHECK_THROWS_AS(GroupSizes({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(GroupSizes({-1}), std::invalid_argument);
  GroupSizes sizes({2, 2, 1});
  CHECK(sizes.group_count() == 3);
  CHECK(sizes.total_authors() == 5);
  CHECK(sizes.size_of(2) == 1);
}

TEST_CASE("multinomial matches hand arithmetic") {
  CHECK(ghostarb::multinomial({1, 1}) == 2);
  CHECK(ghostarb::multinomial({3}) == 1);
  CHECK(ghostarb::multinomial({2, 2, 1}) == 30);  // 5!/(2!*2!*1!)
  CHECK(ghostarb::multinomial({0}) == 1);
  CHECK_THROWS_AS(ghostarb::multinomial({}), std::invalid_argument);
  CHECK_THROWS_AS(ghostarb::multinomial({2, -1}), std::invalid_argument);
}

TEST_CASE("multinomial agrees with the 64-bit factorial oracle") {
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; b <= 5; ++b) {
      for (int c = 0; c <= 5; ++c) {
        CHECK(ghostarb::multinomial({a, b, c}) == multinomial_u64({a, b, c}));
      }
    }
  }
}

TEST_CASE("multinomial stays exact beyond 64 bits") {
  // 60!/(20!)^3 overflows u64; check divisibility-based identities instead.
  BigInt k = ghostarb::multinomial({20, 20, 20});
  CHECK(k > BigInt("18446744073709551615"));
  CHECK(k == ghostarb::factorial(60) /
                 (ghostarb::factorial(20) * ghostarb::factorial(20) *
                  ghostarb::factorial(20)));
}

TEST_CASE("paper quota decrements one group") {
  CHECK(ghostarb::paper_quota(GroupSizes({1, 1}), 0) == 1);
  CHECK(ghostarb::paper_quota(GroupSizes({2, 1}), 0) == 2);
  CHECK(ghostarb::paper_quota(GroupSizes({2, 2, 1}), 2) == 6);  // 4!/(2!*2!*0!)
  CHECK_THROWS_AS(ghostarb::paper_quota(GroupSizes({2, 1}), 2),
                  std::invalid_argument);
  CHECK_THROWS_AS(ghostarb::paper_quota(GroupSizes({2, 1}), -1),
                  std::invalid_argument);
}

TEST_CASE("quota recursion holds on the worked examples") {
  CHECK(ghostarb::verify_pascal(GroupSizes({1, 1})));   // 2 = 1 + 1
  CHECK(ghostarb::verify_pascal(GroupSizes({2, 1})));   // 3 = 2 + 1
  CHECK(ghostarb::verify_pascal(GroupSizes({2, 2, 1})));  // 30 = 12 + 12 + 6
}

TEST_CASE("quota recursion holds for random size vectors") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    GroupSizes sizes(random_sizes(rng, 5, 12));
    CAPTURE(sizes.sizes());
    CHECK(ghostarb::verify_pascal(sizes));
  }
}

TEST_CASE("enumeration yields the frozen orderings") {
  auto perms = ghostarb::enumerate_label_permutations(GroupSizes({2, 1}));
  REQUIRE(perms.size() == 3);
  CHECK(perms[0] == LabelPermutation{0, 0, 1});
  CHECK(perms[1] == LabelPermutation{0, 1, 0});
  CHECK(perms[2] == LabelPermutation{1, 0, 0});

  CHECK(ghostarb::enumerate_label_permutations(GroupSizes({1, 1, 1})).size() == 6);

  auto single = ghostarb::enumerate_label_permutations(GroupSizes({3}));
  REQUIRE(single.size() == 1);
  CHECK(single[0] == LabelPermutation{0, 0, 0});
}

TEST_CASE("enumeration matches the recursive oracle exactly") {
  const std::vector<std::vector<int>> cases = {
      {1, 1}, {2, 1}, {1, 1, 1}, {3, 2}, {2, 2, 1}, {1, 2, 3}, {4, 1, 1},
  };
  for (const auto& sizes : cases) {
    CAPTURE(sizes);
    auto got = ghostarb::enumerate_label_permutations(GroupSizes(sizes));
    auto expected = ordering_oracle(sizes);
    REQUIRE(got.size() == expected.size());
    // Same set, and already in the set's (lexicographic) order.
    std::size_t i = 0;
    for (const auto& perm : expected) {
      CHECK(got[i++] == perm);
    }
  }
}

TEST_CASE("enumeration properties over random size vectors") {
  std::mt19937 rng(7);
  int checked = 0;
  while (checked < 60) {
    std::vector<int> sizes = random_sizes(rng, 5, 12);
    GroupSizes groups(sizes);
    BigInt k = ghostarb::multinomial(sizes);
    if (k > 5000) continue;
    ++checked;
    CAPTURE(sizes);

    std::vector<int> tally(sizes.size(), 0);
    LabelPermutation previous;
    std::int64_t count = 0;
    ghostarb::for_each_label_permutation(
        groups, 5000, [&](const LabelPermutation& perm) {
          if (count > 0) CHECK(previous < perm);  // strictly increasing
          previous = perm;
          ++count;
          std::fill(tally.begin(), tally.end(), 0);
          for (int g : perm) tally[g] += 1;
          CHECK(tally == sizes);  // multiset integrity
        });
    CHECK(BigInt(count) == k);
  }
}

TEST_CASE("enumeration is reproducible") {
  GroupSizes sizes({3, 2, 2});
  CHECK(ghostarb::enumerate_label_permutations(sizes) ==
        ghostarb::enumerate_label_permutations(sizes));
}

TEST_CASE("cap refusal names the count and the cap") {
  GroupSizes sizes({3, 3, 3});  // 1680 orderings
  CHECK_THROWS_WITH_AS(ghostarb::enumerate_label_permutations(sizes, 100),
                       doctest::Contains("1680"), ghostarb::EnumerationCapError);
  try {
    ghostarb::enumerate_label_permutations(sizes, 100);
  } catch (const ghostarb::EnumerationCapError& e) {
    CHECK(e.count() == 1680);
    CHECK(e.cap() == 100);
    CHECK(std::string(e.what()).find("100") != std::string::npos);
  }
  // Counting still works past the cap.
  CHECK(ghostarb::multinomial(sizes.sizes()) == 1680);
  CHECK(ghostarb::paper_quota(sizes, 0) == 560);

  // The default cap refuses factorial-scale enumerations outright.
  GroupSizes twelve(std::vector<int>(12, 1));
  CHECK_THROWS_AS(ghostarb::enumerate_label_permutations(twelve),
                  ghostarb::EnumerationCapError);
  CHECK(ghostarb::multinomial(twelve.sizes()) == 479001600);
}

TEST_CASE("position occupancy counts slots over the enumeration") {
  GroupSizes two_one({2, 1});
  CHECK(ghostarb::position_occupancy(two_one, 0, 0) == 2);
  CHECK(ghostarb::position_occupancy(two_one, 1, 2) == 1);
  CHECK(ghostarb::position_occupancy(GroupSizes({1, 1}), 0, 1) == 1);
  CHECK_THROWS_AS(ghostarb::position_occupancy(two_one, 0, 3),
                  std::invalid_argument);
}

TEST_CASE("occupancy is uniform across positions and equals the quota") {
  const std::vector<std::vector<int>> cases = {{2, 1}, {2, 2, 1}, {3, 1, 2}};
  for (const auto& sizes : cases) {
    GroupSizes groups(sizes);
    CAPTURE(sizes);
    for (int g = 0; g < groups.group_count(); ++g) {
      BigInt quota = ghostarb::paper_quota(groups, g);
      for (int p = 0; p < groups.total_authors(); ++p) {
        CHECK(ghostarb::position_occupancy(groups, g, p) == quota);
      }
    }
  }
}
