#pragma once

// Meter t = 1: lace decomposition, the lace membership criterion, and the
// t = 1 counting formulas.
//
// A lace of length 1 is (p); a lace of length l >= 2 is (p, p, p+1, ..., p+l-2).
// Under t = 1 only the previous car is on the street, so a car is pushed one
// spot forward exactly when it continues the current lace.

#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "meterpark/count.hpp"
#include "meterpark/errors.hpp"
#include "meterpark/parksim.hpp"
#include "meterpark/search.hpp"

namespace meterpark {

struct Lace {
  int start = 1;
  int length = 1;

  /// The value that would extend this lace by one entry.
  int next_value() const { return length == 1 ? start : start + length - 1; }

  std::vector<int> expand() const {
    std::vector<int> seq{start};
    for (int i = 1; i < length; ++i) seq.push_back(start + i - 1);
    return seq;
  }

  friend bool operator==(const Lace&, const Lace&) = default;
};

using LaceDecomposition = std::vector<Lace>;

inline LaceDecomposition lace_decompose(std::span<const int> prefs) {
  if (prefs.empty()) throw InputError("lace decomposition of an empty list");
  LaceDecomposition laces{Lace{prefs[0], 1}};
  for (std::size_t i = 1; i < prefs.size(); ++i) {
    Lace& cur = laces.back();
    if (prefs[i] == cur.next_value()) {
      ++cur.length;
    } else {
      laces.push_back(Lace{prefs[i], 1});
    }
  }
  return laces;
}

inline std::vector<int> expand(const LaceDecomposition& laces) {
  std::vector<int> seq;
  for (const Lace& l : laces) {
    const auto part = l.expand();
    seq.insert(seq.end(), part.begin(), part.end());
  }
  return seq;
}

/// 1-based indices of entries that are not first in their lace.
inline std::vector<int> displaced_indices(std::span<const int> prefs) {
  std::vector<int> idx;
  int pos = 1;
  for (const Lace& l : lace_decompose(prefs)) {
    for (int k = 1; k < l.length; ++k) idx.push_back(pos + k);
    pos += l.length;
  }
  return idx;
}

/// 1-metered membership: every entry equal to n opens its lace.
inline bool is_t1_by_lace(int n, std::span<const int> prefs) {
  validate_prefs(n, prefs);
  if (prefs.empty()) return true;
  int pos = 0;
  for (const Lace& l : lace_decompose(prefs)) {
    for (int k = 1; k < l.length; ++k) {
      if (prefs[pos + k] == n) return false;
    }
    pos += l.length;
  }
  return true;
}

/// mpf_{m,n}(1) from mpf_{m+1} = n mpf_m - mpf_{m-1}, mpf_0 = 1, mpf_1 = n.
inline Count count_t1_recursive(int m, int n) {
  if (n < 1 || m < 0 || m > n + 1) {
    throw DomainError("t=1 recursion holds for 0 <= m <= n+1 (got m=" +
                      std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
  Count prev = 1, cur = n;
  if (m == 0) return prev;
  for (int k = 1; k < m; ++k) {
    Count next = Count(n) * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// mpf_{n,n}(1) = sum_{k=0}^{n} (n-2)^{n-k} C(2n+1-k, k), for n > 2.
inline Count count_t1_diag_closed(int n) {
  if (n <= 2) throw DomainError("diagonal closed form requires n > 2");
  Count sum = 0;
  for (int k = 0; k <= n; ++k) {
    sum += unit_pow(n - 2, n - k) * binomial(2 * n + 1 - k, k);
  }
  return sum;
}

/// Two-root closed form of the t=1 recursion, evaluated in long double and
/// rounded. Throws NumericalError if the value is not within 0.25 of an integer.
inline Count count_t1_binet(int m, int n) {
  if (n <= 2 || m < 0 || m > n + 1) {
    throw DomainError("closed form requires n > 2 and 0 <= m <= n+1 (got m=" +
                      std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
  using R = long double;
  const R root = std::sqrt(static_cast<R>(n) * n - 4);
  const R a = (n + root) / 2, b = (n - root) / 2;
  const R ca = (n * (n + root) - 2) / (n * (n + root) - 4);
  const R cb = (n * (n - root) - 2) / (n * (n - root) - 4);
  const R value = ca * std::pow(a, m) + cb * std::pow(b, m);
  const R rounded = std::round(value);
  if (std::fabs(value - rounded) > 0.25L || rounded > 9.0e18L) {
    throw NumericalError("closed form for m=" + std::to_string(m) + ", n=" +
                         std::to_string(n) + " is not resolvable in long double");
  }
  return Count(static_cast<long long>(rounded));
}

/// mpf_{m,2}(1) for m > 2: 2^{(m+1)/2} (m odd), 3 * 2^{m/2-1} (m even).
inline Count count_t1_n2(int m) {
  if (m <= 2) throw DomainError("two-spot formula requires m > 2");
  if (m % 2 == 1) return unit_pow(2, (m + 1) / 2);
  return 3 * unit_pow(2, m / 2 - 1);
}

/// mpf_{3,n}(1) = n^3 - 2n, n >= 2.
inline Count count_t1_row3(int n) {
  if (n < 2) throw DomainError("three-car formula requires n >= 2");
  return unit_pow(n, 3) - 2 * n;
}

/// Number of 1-metered (m,n)-parking functions whose last car parks in `spot`,
/// by exhaustive search.
inline Count count_last_parks_at(int m, int n, int spot,
                                 const SearchOptions& opts = {}) {
  if (m < 1 || m > n || spot < 1 || spot > n) {
    throw DomainError("last-spot count requires 1 <= m <= n and spot in [n]");
  }
  struct Visit {
    int n, spot;
    MeteredParker parker;
    std::vector<int> out;
    void operator()(std::uint64_t& acc, std::span<const int> prefs) {
      if (parker.parks_all(prefs, out) && out.back() == spot) ++acc;
    }
  };
  const auto hits = fold_all_lists(
      m, n, opts, [] { return std::uint64_t{0}; },
      Visit{n, spot, MeteredParker(n, 1), std::vector<int>(m)},
      [](std::uint64_t& a, std::uint64_t b) { a += b; });
  return Count(hits);
}

}  // namespace meterpark
