#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "meterpark/enumeration.hpp"
#include "meterpark/periodic.hpp"
#include "naive.hpp"

using namespace meterpark;

namespace {

OutcomePermutation perm(std::vector<int> v) { return OutcomePermutation(std::move(v)); }

// Direct sum using the same permutation for both factors.
Count same_pi_sum(int n, int k) {
  std::vector<int> pi(n);
  for (int i = 0; i < n; ++i) pi[i] = i + 1;
  Count total = 0;
  do {
    Count w = 1;
    for (int i = 1; i <= n; ++i) w *= l_stat(perm(pi), i);
    for (int j = 1; j <= k; ++j) w *= pi[(j - 1) % n];
    total += w;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return total;
}

}  // namespace

TEST(OutcomePermutation, Validation) {
  EXPECT_THROW(perm({1, 1, 2}), InputError);
  EXPECT_THROW(perm({0, 1}), InputError);
  EXPECT_EQ(perm({2, 3, 1}).inverse().pi, (std::vector{3, 1, 2}));
}

TEST(LStat, Examples) {
  EXPECT_EQ(l_stat(perm({2, 1, 3}), 3), 3);
  EXPECT_EQ(l_stat(perm({1, 3, 2}), 3), 1);
  EXPECT_EQ(l_stat(perm({1, 2, 3}), 2), 2);
  EXPECT_EQ(l_stat(perm({1, 3, 2}), 2), 2);
  EXPECT_THROW(l_stat(perm({1, 2}), 3), InputError);
  EXPECT_THROW(l_stat(perm({1, 2}), 0), InputError);
}

TEST(OutcomePfCount, Examples) {
  EXPECT_EQ(outcome_pf_count(perm({1, 2, 3})), 6);
  EXPECT_EQ(outcome_pf_count(perm({3, 2, 1})), 1);
  EXPECT_EQ(outcome_pf_count(perm({2, 3, 1})), 2);
}

TEST(OutcomePfCount, PartitionsAllParkingFunctions) {
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> pi(n);
    for (int i = 0; i < n; ++i) pi[i] = i + 1;
    Count sum = 0;
    do {
      sum += outcome_pf_count(perm(pi));
    } while (std::next_permutation(pi.begin(), pi.end()));
    EXPECT_EQ(sum, classical_pf_count(n, n));
  }
}

TEST(OutcomePfCount, MatchesGroupedSimulation) {
  for (int n = 1; n <= 5; ++n) {
    std::map<std::vector<int>, long> by_outcome;
    naive::for_each_list(n, n, [&](const std::vector<int>& p) {
      const auto out = naive::park(n, n, p);
      if (std::find(out.begin(), out.end(), 0) == out.end()) ++by_outcome[out];
    });
    for (const auto& [outcome, c] : by_outcome) EXPECT_EQ(outcome_pf_count(perm(outcome)), c);
  }
}

TEST(IsN1Metered, Examples) {
  EXPECT_TRUE(is_n1_metered(4, std::vector{2, 4, 2, 1, 1, 3, 2, 1, 2, 3, 3}));
  EXPECT_TRUE(is_n1_metered(2, std::vector{1, 2, 1, 2, 1}));
  EXPECT_FALSE(is_n1_metered(2, std::vector{1, 2, 2}));
  // fewer cars than spots: classical
  EXPECT_TRUE(is_n1_metered(4, std::vector{4, 3}));
  EXPECT_FALSE(is_n1_metered(4, std::vector{4, 4}));
}

TEST(IsN1Metered, MatchesSimulation) {
  for (int n = 1; n <= 4; ++n) {
    for (int m = 1; m <= n + 4; ++m) {
      naive::for_each_list(m, n, [&](const std::vector<int>& p) {
        ASSERT_EQ(is_n1_metered(n, p), is_mpf({m, n, n - 1}, p));
      });
    }
  }
}

TEST(IsN1Metered, MemberOutcomesArePeriodic) {
  for (int n = 1; n <= 4; ++n) {
    for (int m = n; m <= n + 4; ++m) {
      naive::for_each_list(m, n, [&](const std::vector<int>& p) {
        const auto out = simulate_metered({m, n, n - 1}, p);
        if (!out.all_parked()) return;
        for (int i = n; i < m; ++i) ASSERT_EQ(out.slots[i], out.slots[i - n]);
      });
    }
  }
}

TEST(CountN1, Examples) {
  EXPECT_EQ(count_n1(3, 2), 48);
  EXPECT_EQ(count_n1(4, 2), 540);
  EXPECT_EQ(count_n1(5, 2), 7734);
  EXPECT_EQ(count_n1(4, 0), 125);
  EXPECT_THROW(count_n1(11, 1), ResourceError);
  EXPECT_THROW(count_n1(0, 1), DomainError);
}

TEST(CountN1, MatchesBruteForce) {
  for (int n = 1; n <= 5; ++n) {
    for (int k = 0; k <= 4; ++k) {
      if (n == 5 && k > 2) continue;
      EXPECT_EQ(count_n1(n, k), brute_count(n + k, n, n - 1)) << n << "," << k;
    }
  }
}

TEST(CountN1, WorkerCountDoesNotMatter) {
  for (unsigned w : {1u, 2u, 8u}) EXPECT_EQ(count_n1(6, 3, w), count_n1(6, 3, 0));
}

TEST(CountN1, SamePermutationReadingIsOff) {
  EXPECT_EQ(same_pi_sum(4, 2), 543);
  EXPECT_NE(same_pi_sum(4, 2), count_n1(4, 2));
}

TEST(CountN1, ExtraCarDiagonalIsSumOfFirstEntries) {
  for (int n = 2; n <= 7; ++n) {
    Count first_sum = 0;
    for (int j = 1; j <= n; ++j) first_sum += Count(j) * count_pf_first_entry(n, n, j);
    EXPECT_EQ(count_n1(n, 1), first_sum);
    EXPECT_EQ(count(n - 1, n, n - 1).value, 2 * unit_pow(n + 1, n - 2));
  }
}
