#pragma once

// Meter t = n-1 with m >= n cars. Once the first n cars fill the street, car
// n+i can only take the spot car i just vacated, so the outcome repeats the
// first n spots with period n.

#include <algorithm>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "meterpark/count.hpp"
#include "meterpark/errors.hpp"
#include "meterpark/parksim.hpp"
#include "meterpark/search.hpp"

namespace meterpark {

/// Permutation of [n] in one-line notation.
struct OutcomePermutation {
  std::vector<int> pi;

  explicit OutcomePermutation(std::vector<int> p) : pi(std::move(p)) {
    std::vector<char> seen(pi.size() + 1, 0);
    for (int v : pi) {
      if (v < 1 || v > static_cast<int>(pi.size()) || seen[v]) {
        throw InputError("not a permutation of [" + std::to_string(pi.size()) + "]");
      }
      seen[v] = 1;
    }
  }

  int size() const { return static_cast<int>(pi.size()); }

  OutcomePermutation inverse() const {
    std::vector<int> inv(pi.size());
    for (std::size_t i = 0; i < pi.size(); ++i) inv[pi[i] - 1] = static_cast<int>(i) + 1;
    return OutcomePermutation(std::move(inv));
  }
};

/// L_i(pi): length of the longest window ending at position i (1-based) on
/// which pi_i is the maximum.
inline int l_stat(const OutcomePermutation& p, int i) {
  if (i < 1 || i > p.size()) {
    throw InputError("position " + std::to_string(i) + " outside [1, " +
                     std::to_string(p.size()) + "]");
  }
  const auto& pi = p.pi;
  int len = 1;
  while (i - len - 1 >= 0 && pi[i - len - 1] < pi[i - 1]) ++len;
  return len;
}

namespace detail {

inline Count l_product(std::span<const int> word) {
  Count prod = 1;
  for (std::size_t i = 0; i < word.size(); ++i) {
    long len = 1;
    while (i >= static_cast<std::size_t>(len) && word[i - len] < word[i]) ++len;
    prod *= len;
  }
  return prod;
}

}  // namespace detail

/// Number of classical parking functions of length n whose outcome (car i
/// parks in spot outcome_i) is the given permutation. The window statistic is
/// taken on the spot-to-car word, i.e. the inverse of the outcome.
inline Count outcome_pf_count(const OutcomePermutation& outcome) {
  return detail::l_product(outcome.inverse().pi);
}

/// Membership for meter t = n-1 via the periodic criterion. With fewer than
/// n cars the scheme is classical.
inline bool is_n1_metered(int n, std::span<const int> prefs) {
  validate_prefs(n, prefs);
  const int m = static_cast<int>(prefs.size());
  if (m < n) return is_pf_by_rearrangement(m, n, prefs);
  const auto head = prefs.first(static_cast<std::size_t>(n));
  if (!is_pf_by_rearrangement(n, n, head)) return false;
  const auto outcome = simulate_classical(ParkingInstance{n, n, n - 1}, head);
  for (int i = 1; i <= m - n; ++i) {
    if (prefs[n + i - 1] > outcome.slots[(i - 1) % n]) return false;
  }
  return true;
}

inline constexpr int kMaxPermutationSpots = 10;

/// mpf_{n+k,n}(n-1) as a sum over outcomes pi in S_n of
/// (#parking functions with outcome pi) * prod_{j=1}^{k} pi_{((j-1) mod n)+1}.
/// Permutations are split by leading entry (contiguous lexicographic blocks).
inline Count count_n1(int n, int k, unsigned workers = 0) {
  if (n < 1 || k < 0) throw DomainError("count_n1 requires n >= 1 and k >= 0");
  if (n > kMaxPermutationSpots) {
    throw ResourceError("count_n1 enumerates n! permutations; refusing n=" +
                        std::to_string(n) + " > " +
                        std::to_string(kMaxPermutationSpots));
  }
  if (k == 0) return classical_pf_count(n, n);

  // Iterate spot-to-car words q; the outcome is q^{-1}.
  auto block = [n, k](int lead) {
    std::vector<int> q{lead};
    for (int v = 1; v <= n; ++v) {
      if (v != lead) q.push_back(v);
    }
    std::vector<int> outcome(static_cast<std::size_t>(n));
    Count sum = 0;
    do {
      for (int s = 0; s < n; ++s) outcome[q[s] - 1] = s + 1;
      Count weight = detail::l_product(q);
      for (int j = 1; j <= k; ++j) weight *= outcome[(j - 1) % n];
      sum += weight;
    } while (std::next_permutation(q.begin() + 1, q.end()));
    return sum;
  };

  std::vector<Count> partial(static_cast<std::size_t>(n));
  const unsigned pool_size = workers == 0 ? std::thread::hardware_concurrency() : workers;
  if (pool_size <= 1 || n == 1) {
    for (int lead = 1; lead <= n; ++lead) partial[lead - 1] = block(lead);
  } else {
    std::vector<std::jthread> pool;
    for (int lead = 1; lead <= n; ++lead) {
      pool.emplace_back([&, lead] { partial[lead - 1] = block(lead); });
    }
  }
  Count total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace meterpark
