#pragma once

// Classical and t-metered parking on a one-way street of n spots.
//
// Spots and preferences are 1-based. Cars are indexed from 0 internally;
// user-facing text (CLI output, error messages) numbers them from 1.

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "meterpark/errors.hpp"

namespace meterpark {

struct ParkingInstance {
  int cars = 1;   // m
  int spots = 1;  // n
  int meter = 0;  // t
};

using PreferenceList = std::vector<int>;

/// Per-car spot, with kFail marking a car that left the street unparked.
struct ParkingOutcome {
  static constexpr int kFail = 0;

  std::vector<int> slots;

  bool failed(std::size_t car) const { return slots[car] == kFail; }
  bool all_parked() const {
    return std::find(slots.begin(), slots.end(), kFail) == slots.end();
  }
  std::size_t size() const { return slots.size(); }

  friend bool operator==(const ParkingOutcome&, const ParkingOutcome&) = default;
};

struct CarStatistics {
  int lucky_count = 0;
  // Displacement of each car; FAIL cars are recorded as 0 and not counted lucky.
  std::vector<int> displacements;
  long long total_displacement = 0;
};

inline void validate_instance(const ParkingInstance& inst) {
  if (inst.cars < 1 || inst.spots < 1 || inst.meter < 0) {
    throw InputError("instance requires m >= 1, n >= 1, t >= 0 (got m=" +
                     std::to_string(inst.cars) + ", n=" +
                     std::to_string(inst.spots) + ", t=" +
                     std::to_string(inst.meter) + ")");
  }
}

inline void validate_prefs(int spots, std::span<const int> prefs) {
  for (std::size_t i = 0; i < prefs.size(); ++i) {
    if (prefs[i] < 1 || prefs[i] > spots) {
      throw InputError("preference " + std::to_string(prefs[i]) + " of car " +
                       std::to_string(i + 1) + " is outside [1, " +
                       std::to_string(spots) + "]");
    }
  }
}

inline void validate(const ParkingInstance& inst, std::span<const int> prefs) {
  validate_instance(inst);
  if (prefs.size() != static_cast<std::size_t>(inst.cars)) {
    throw InputError("preference list has length " +
                     std::to_string(prefs.size()) + ", expected m=" +
                     std::to_string(inst.cars));
  }
  validate_prefs(inst.spots, prefs);
}

namespace detail {

// First free spot at or after `from`, or 0 if the street end is reached.
// `occupant` is indexed by spot, entry 0 unused; -1 means free.
inline int seek_forward(const std::vector<int>& occupant, int from, int spots) {
  for (int s = from; s <= spots; ++s) {
    if (occupant[s] < 0) return s;
  }
  return ParkingOutcome::kFail;
}

}  // namespace detail

/// Reusable metered parker for hot loops: no allocation per call once sized.
/// A meter of t >= m never evicts anyone and so reproduces the classical scheme.
class MeteredParker {
 public:
  MeteredParker(int spots, int meter) : spots_(spots), meter_(meter) {}

  /// Parks all cars, writing spots (or kFail) into `out`. Returns the number
  /// of cars that failed. With `stop_at_fail`, returns 1 at the first failure
  /// and leaves the rest of `out` unspecified.
  int run(std::span<const int> prefs, std::span<int> out,
          bool stop_at_fail = false) {
    occupant_.assign(static_cast<std::size_t>(spots_) + 1, -1);
    int failures = 0;
    const int m = static_cast<int>(prefs.size());
    for (int j = 0; j < m; ++j) {
      const int leaving = j - meter_ - 1;
      if (leaving >= 0 && out[leaving] != ParkingOutcome::kFail) {
        occupant_[out[leaving]] = -1;
      }
      const int spot = detail::seek_forward(occupant_, prefs[j], spots_);
      out[j] = spot;
      if (spot == ParkingOutcome::kFail) {
        ++failures;
        if (stop_at_fail) return failures;
      } else {
        occupant_[spot] = j;
      }
    }
    return failures;
  }

  bool parks_all(std::span<const int> prefs, std::span<int> scratch) {
    return run(prefs, scratch, true) == 0;
  }

 private:
  int spots_;
  int meter_;
  std::vector<int> occupant_;
};

inline ParkingOutcome simulate_classical(const ParkingInstance& inst,
                                         std::span<const int> prefs) {
  validate(inst, prefs);
  ParkingOutcome out{std::vector<int>(prefs.size())};
  std::vector<int> occupant(static_cast<std::size_t>(inst.spots) + 1, -1);
  for (std::size_t j = 0; j < prefs.size(); ++j) {
    const int spot = detail::seek_forward(occupant, prefs[j], inst.spots);
    out.slots[j] = spot;
    if (spot != ParkingOutcome::kFail) occupant[spot] = static_cast<int>(j);
  }
  return out;
}

/// Before car j tries to park, car j-t-1 (if it parked) has left. A failed car
/// never occupies a spot; later departures still follow car order.
inline ParkingOutcome simulate_metered(const ParkingInstance& inst,
                                       std::span<const int> prefs) {
  validate(inst, prefs);
  ParkingOutcome out{std::vector<int>(prefs.size())};
  MeteredParker(inst.spots, inst.meter).run(prefs, out.slots);
  return out;
}

inline bool is_mpf(const ParkingInstance& inst, std::span<const int> prefs) {
  return simulate_metered(inst, prefs).all_parked();
}

/// Classical membership via the sorted test a'_i <= n - m + i.
inline bool is_pf_by_rearrangement(int m, int n, std::span<const int> prefs) {
  if (m > n) {
    throw DomainError("classical (m,n)-parking functions require m <= n (got m=" +
                      std::to_string(m) + ", n=" + std::to_string(n) + ")");
  }
  if (prefs.size() != static_cast<std::size_t>(m)) {
    throw InputError("preference list length does not match m");
  }
  validate_prefs(n, prefs);
  std::vector<int> sorted(prefs.begin(), prefs.end());
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < m; ++i) {
    if (sorted[i] > n - m + i + 1) return false;
  }
  return true;
}

inline CarStatistics statistics(const ParkingOutcome& outcome,
                                std::span<const int> prefs) {
  if (outcome.size() != prefs.size()) {
    throw InputError("outcome and preference list lengths differ");
  }
  CarStatistics st;
  st.displacements.resize(prefs.size(), 0);
  for (std::size_t i = 0; i < prefs.size(); ++i) {
    if (outcome.failed(i)) continue;
    const int d = outcome.slots[i] - prefs[i];
    if (d < 0) throw InputError("outcome places a car before its preference");
    st.displacements[i] = d;
    st.total_displacement += d;
    if (d == 0) ++st.lucky_count;
  }
  return st;
}

/// Necessary condition: every window of t+1 consecutive cars has at least
/// t+1-n+i preferences <= i, for each i in [n]. Vacuous when m < t+1.
inline bool window_condition(const ParkingInstance& inst,
                             std::span<const int> prefs) {
  validate(inst, prefs);
  const int m = inst.cars, n = inst.spots, t = inst.meter;
  if (m < t + 1) return true;
  for (int start = 0; start + t < m; ++start) {
    // at_most[i] = #{k in window : a_k <= i}
    std::vector<int> at_most(static_cast<std::size_t>(n) + 1, 0);
    for (int k = start; k <= start + t; ++k) ++at_most[prefs[k]];
    for (int i = 1; i <= n; ++i) at_most[i] += at_most[i - 1];
    for (int i = 1; i <= n; ++i) {
      if (at_most[i] < t + 1 - n + i) return false;
    }
  }
  return true;
}

}  // namespace meterpark
