#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "meterpark/errors.hpp"

namespace meterpark {

using Count = boost::multiprecision::cpp_int;

inline std::string to_string(const Count& c) { return c.str(); }

/// b^e in exact arithmetic. Negative exponents only ever occur with base 1
/// in the tree-function style formulas used here (e.g. 1^{-1} at k = n), so
/// 1^e is defined as 1 for every e and any other base with e < 0 is a bug.
inline Count unit_pow(std::int64_t base, std::int64_t exp) {
  if (exp < 0) {
    if (base != 1) {
      throw DomainError("negative exponent " + std::to_string(exp) +
                        " with base " + std::to_string(base));
    }
    return 1;
  }
  return boost::multiprecision::pow(Count(base), static_cast<unsigned>(exp));
}

/// C(n, k); zero outside 0 <= k <= n.
inline Count binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Count r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline Count factorial(std::int64_t n) {
  Count r = 1;
  for (std::int64_t i = 2; i <= n; ++i) r *= i;
  return r;
}

/// n (n-1) ... (n-k+1); zero once a factor hits zero.
inline Count falling_factorial(std::int64_t n, std::int64_t k) {
  Count r = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    if (n - i <= 0) return 0;
    r *= n - i;
  }
  return r;
}

/// |PF_{m,n}| = (n-m+1)(n+1)^{m-1} for 0 <= m <= n; the empty list counts once.
inline Count classical_pf_count(std::int64_t m, std::int64_t n) {
  if (m == 0) return 1;
  if (m < 0 || m > n) return 0;
  return Count(n - m + 1) * unit_pow(n + 1, m - 1);
}

}  // namespace meterpark
