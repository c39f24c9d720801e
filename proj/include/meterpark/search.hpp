#pragma once

// Exhaustive search over [n]^m in lexicographic order, split into contiguous
// rank ranges that run on separate threads and fold associatively.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "meterpark/errors.hpp"

namespace meterpark {

/// Budget unit is simulated car-steps: n^m lists times m cars each.
inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000ULL;

struct SearchOptions {
  unsigned workers = 0;  // 0 = hardware concurrency
  std::uint64_t budget = kDefaultBudget;

  unsigned resolved_workers() const {
    if (workers != 0) return workers;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }
};

/// n^m, or nullopt on 64-bit overflow.
inline std::optional<std::uint64_t> list_space_size(int m, int n) {
  std::uint64_t total = 1;
  for (int i = 0; i < m; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / n) return std::nullopt;
    total *= static_cast<std::uint64_t>(n);
  }
  return total;
}

inline std::optional<std::uint64_t> required_car_steps(int m, int n) {
  auto total = list_space_size(m, n);
  if (!total || *total > std::numeric_limits<std::uint64_t>::max() / std::max(m, 1)) {
    return std::nullopt;
  }
  return *total * static_cast<std::uint64_t>(std::max(m, 1));
}

inline void check_budget(int m, int n, std::uint64_t budget) {
  const auto steps = required_car_steps(m, n);
  if (!steps || *steps > budget) {
    throw ResourceError(
        "enumerating [" + std::to_string(n) + "]^" + std::to_string(m) +
        " needs " +
        (steps ? std::to_string(*steps) : std::string("more than 2^64")) +
        " car-steps; budget is " + std::to_string(budget));
  }
}

/// Odometer over [n]^m with the last entry varying fastest.
class Odometer {
 public:
  Odometer(int m, int n, std::uint64_t rank = 0)
      : n_(n), digits_(static_cast<std::size_t>(m), 1) {
    for (int i = m - 1; i >= 0; --i) {
      digits_[i] = static_cast<int>(rank % n) + 1;
      rank /= n;
    }
  }

  std::span<const int> value() const { return digits_; }

  /// Advances to the next list; false after wrapping past (n, ..., n).
  bool next() {
    for (auto i = digits_.size(); i-- > 0;) {
      if (digits_[i] < n_) {
        ++digits_[i];
        return true;
      }
      digits_[i] = 1;
    }
    return false;
  }

 private:
  int n_;
  std::vector<int> digits_;
};

/// Splits [0, total) into `parts` contiguous, nearly equal ranges.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> partition_ranks(
    std::uint64_t total, unsigned parts) {
  parts = std::max(1u, parts);
  if (total < parts) parts = static_cast<unsigned>(std::max<std::uint64_t>(total, 1));
  std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
  const std::uint64_t base = total / parts, extra = total % parts;
  std::uint64_t lo = 0;
  for (unsigned p = 0; p < parts; ++p) {
    const std::uint64_t len = base + (p < extra ? 1 : 0);
    ranges.emplace_back(lo, lo + len);
    lo += len;
  }
  return ranges;
}

/// Visits lists with ranks in [lo, hi).
template <class Acc, class Visit>
void fold_rank_range(int m, int n, std::uint64_t lo, std::uint64_t hi, Acc& acc,
                     Visit& visit) {
  if (lo >= hi) return;
  Odometer odo(m, n, lo);
  for (std::uint64_t r = lo; r < hi; ++r) {
    visit(acc, odo.value());
    odo.next();
  }
}

/// Folds `visit(acc, prefs)` over all of [n]^m. Each worker owns a private
/// accumulator built by `make`; partials are merged in rank order by `combine`.
template <class MakeAcc, class Visit, class Combine>
auto fold_all_lists(int m, int n, const SearchOptions& opts, MakeAcc make,
                    Visit visit, Combine combine) {
  check_budget(m, n, opts.budget);
  const std::uint64_t total = *list_space_size(m, n);
  const auto ranges = partition_ranks(total, opts.resolved_workers());
  using Acc = decltype(make());
  std::vector<Acc> partial;
  partial.reserve(ranges.size());
  for (std::size_t i = 0; i < ranges.size(); ++i) partial.push_back(make());

  if (ranges.size() == 1) {
    fold_rank_range(m, n, ranges[0].first, ranges[0].second, partial[0], visit);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(ranges.size());
    for (std::size_t i = 0; i < ranges.size(); ++i) {
      pool.emplace_back([&, i] {
        auto local_visit = visit;
        fold_rank_range(m, n, ranges[i].first, ranges[i].second, partial[i],
                        local_visit);
      });
    }
  }
  Acc result = std::move(partial[0]);
  for (std::size_t i = 1; i < partial.size(); ++i) combine(result, partial[i]);
  return result;
}

}  // namespace meterpark
