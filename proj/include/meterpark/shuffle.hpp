#pragma once

// Parking-function shuffles, first-entry counts, and the t = m-2 case.
//
// For a suffix (pi_2, ..., pi_m) over [n], the set of first entries j that make
// (j, pi_2, ..., pi_m) a classical (m,n)-parking function is always an initial
// segment [k]. The suffix is then an interleaving of a classical
// (m-n+k-1, k-1)-parking function (entries < k) with a classical
// (n-k, n-k)-parking function shifted up by k (entries >= k).

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "meterpark/count.hpp"
#include "meterpark/errors.hpp"
#include "meterpark/parksim.hpp"

namespace meterpark {

struct ShuffleClassification {
  int k = 0;
  std::vector<int> alpha_part;  // entries < k, in order
  std::vector<int> beta_part;   // entries >= k, in order
};

/// Largest j in [n] such that (j, suffix...) is a classical (m,n)-parking
/// function with m = |suffix| + 1, or 0 if none. Found by trying every j.
inline int a_set_max(int n, std::span<const int> suffix) {
  const int m = static_cast<int>(suffix.size()) + 1;
  if (m > n) {
    throw DomainError("A-set needs m <= n (suffix of length " +
                      std::to_string(suffix.size()) + " over [" +
                      std::to_string(n) + "])");
  }
  validate_prefs(n, suffix);
  std::vector<int> candidate(static_cast<std::size_t>(m));
  std::copy(suffix.begin(), suffix.end(), candidate.begin() + 1);
  int best = 0;
  for (int j = 1; j <= n; ++j) {
    candidate[0] = j;
    if (is_pf_by_rearrangement(m, n, candidate)) best = j;
  }
  return best;
}

inline std::optional<ShuffleClassification> classify_shuffle(
    int m, int n, std::span<const int> suffix) {
  if (suffix.size() + 1 != static_cast<std::size_t>(m)) {
    throw InputError("suffix must have length m-1");
  }
  const int k = a_set_max(n, suffix);
  if (k == 0) return std::nullopt;
  ShuffleClassification cls{k, {}, {}};
  for (int v : suffix) (v < k ? cls.alpha_part : cls.beta_part).push_back(v);
  return cls;
}

/// Checks that the split is an interleaving of a (m-n+k-1, k-1)-parking
/// function and a (n-k, n-k)-parking function shifted by k.
inline bool shuffle_split_valid(int m, int n, const ShuffleClassification& cls) {
  const int k = cls.k;
  if (k < 1 || k > n) return false;
  const int alpha_len = m - n + k - 1, beta_len = n - k;
  if (static_cast<int>(cls.alpha_part.size()) != alpha_len ||
      static_cast<int>(cls.beta_part.size()) != beta_len) {
    return false;
  }
  if (alpha_len > k - 1) return false;
  if (!is_pf_by_rearrangement(alpha_len, k - 1, cls.alpha_part)) return false;
  std::vector<int> shifted;
  for (int v : cls.beta_part) {
    if (v <= k) return false;
    shifted.push_back(v - k);
  }
  return is_pf_by_rearrangement(beta_len, beta_len, shifted);
}

/// |Sh_m(k-1, n-k)|: the number of suffixes whose A-set is exactly [k].
inline Count shuffle_count(int m, int n, int k) {
  if (m < 1 || m > n || k < 1 || k > n) {
    throw DomainError("shuffle count requires 1 <= m <= n and k in [n]");
  }
  const int threshold = n - m + 1;
  if (k < threshold) return 0;
  if (k == threshold) return unit_pow(m, m - 2);
  return binomial(m - 1, n - k) * Count(n - m + 1) * unit_pow(k, m - n + k - 2) *
         unit_pow(n - k + 1, n - k - 1);
}

/// Number of classical (m,n)-parking functions with first entry j: the sizes
/// of all shuffle classes with k >= j. The leading coefficient is (n-m+1).
inline Count count_pf_first_entry(int m, int n, int j) {
  if (m < 1 || m > n || j < 1 || j > n) {
    throw DomainError("first-entry count requires 1 <= m <= n and j in [n]");
  }
  Count total = 0;
  for (int i = std::max(j, n - m + 2); i <= n; ++i) total += shuffle_count(m, n, i);
  if (j <= n - m + 1) total += unit_pow(m, m - 2);
  return total;
}

/// Membership for meter t = m-2, 2 < m <= n+1, via the shuffle criterion.
inline bool is_m2_metered(int n, std::span<const int> prefs) {
  const int m = static_cast<int>(prefs.size());
  if (m <= 2 || m > n + 1) {
    throw DomainError("t=m-2 criterion requires 2 < m <= n+1 (got m=" +
                      std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
  validate_prefs(n, prefs);
  const auto middle = prefs.subspan(1, static_cast<std::size_t>(m - 2));
  const int k = a_set_max(n, middle);
  if (k == 0) return false;
  int j = 0;
  if (m <= n && k > 1) {
    std::vector<int> low;
    for (int v : middle) {
      if (v < k) low.push_back(v);
    }
    j = a_set_max(k - 1, low);
  }
  const int first = prefs.front(), last = prefs.back();
  return (first <= j && last <= k) || (j < first && first <= k && last <= first);
}

/// mpf_{m,n}(m-2) by the closed triple sum, 2 < m <= n+1.
inline Count count_m2(int m, int n) {
  if (m <= 2 || m > n + 1) {
    throw DomainError("t=m-2 count requires 2 < m <= n+1 (got m=" +
                      std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
  const int gap = n - m;  // >= -1
  Count total = unit_pow(gap + 2, 2) * unit_pow(m - 1, m - 3);
  for (int k = gap + 3; k <= n; ++k) {
    Count inner = binomial(k + 1, 2) * Count(gap + 2) * unit_pow(k, m - n + k - 3);
    inner += (Count(k) * (gap + 1) - binomial(gap + 2, 2)) *
             unit_pow(k - n + m - 1, k - n + m - 3);
    for (int j = gap + 2; j <= k - 1; ++j) {
      inner += (Count(j) * k - binomial(j + 1, 2)) *
               binomial(m - 2 - n + k, k - 1 - j) * Count(gap + 1) *
               unit_pow(j, j + m - 2 - n) * unit_pow(k - j, k - j - 2);
    }
    total += binomial(m - 2, n - k) * unit_pow(n - k + 1, n - k - 1) * inner;
  }
  return total;
}

/// mpf_{m,m-1}(m-2): the sum of first entries over classical parking
/// functions of length m-1.
inline Count count_m2_street_minus_one(int m) {
  if (m < 2) throw DomainError("street-minus-one count requires m >= 2");
  Count total = 0;
  for (int i = 1; i <= m - 1; ++i) {
    for (int s = 0; s <= m - 1 - i; ++s) {
      total += binomial(m - 2, s) * Count(i) * unit_pow(s + 1, s - 1) *
               unit_pow(m - s - 1, m - s - 3);
    }
  }
  return total;
}

}  // namespace meterpark
