#pragma once

// Slow reference simulator for cross-checks. Models the street as a list of
// parked (car, spot) pairs and removes car j-t right after car j is handled.

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

namespace naive {

inline std::vector<int> park(int n, int t, const std::vector<int>& prefs) {
  std::vector<std::pair<int, int>> street;  // (car, spot)
  std::vector<int> result;
  for (int j = 0; j < static_cast<int>(prefs.size()); ++j) {
    int spot = 0;
    for (int s = prefs[j]; s <= n && spot == 0; ++s) {
      const bool taken = std::any_of(street.begin(), street.end(),
                                     [s](const auto& p) { return p.second == s; });
      if (!taken) spot = s;
    }
    result.push_back(spot);
    if (spot != 0) street.emplace_back(j, spot);
    const int leaving = j - t;
    std::erase_if(street, [leaving](const auto& p) { return p.first == leaving; });
  }
  return result;
}

inline bool parks_all(int n, int t, const std::vector<int>& prefs) {
  const auto r = park(n, t, prefs);
  return std::find(r.begin(), r.end(), 0) == r.end();
}

inline std::vector<int> random_prefs(std::mt19937& rng, int m, int n) {
  std::uniform_int_distribution<int> d(1, n);
  std::vector<int> v(static_cast<std::size_t>(m));
  for (auto& x : v) x = d(rng);
  return v;
}

// Every list in [n]^m, last entry fastest.
template <class F>
void for_each_list(int m, int n, F&& f) {
  std::vector<int> v(static_cast<std::size_t>(m), 1);
  while (true) {
    f(static_cast<const std::vector<int>&>(v));
    int i = m - 1;
    while (i >= 0 && v[i] == n) v[i--] = 1;
    if (i < 0) return;
    ++v[i];
  }
}

}  // namespace naive
