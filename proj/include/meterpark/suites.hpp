#pragma once

// Exhaustive verification suites behind `meterpark check`. Each suite compares
// a characterization or formula against direct simulation over small grids.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "meterpark/enumeration.hpp"
#include "meterpark/lace.hpp"
#include "meterpark/parksim.hpp"
#include "meterpark/periodic.hpp"
#include "meterpark/search.hpp"
#include "meterpark/shuffle.hpp"

namespace meterpark {

struct CheckResult {
  std::string name;
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
  std::vector<std::string> samples{};  // first few failure descriptions

  bool passed() const { return failures == 0; }

  void record(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (!ok) {
      ++failures;
      if (samples.size() < 5) samples.push_back(describe());
    }
  }
  void merge(const CheckResult& o) {
    checks += o.checks;
    failures += o.failures;
    for (const auto& s : o.samples) {
      if (samples.size() < 5) samples.push_back(s);
    }
  }
};

struct SuiteResult {
  std::string name;
  bool informational = false;  // never fails the run
  std::vector<CheckResult> checks{};
  std::vector<std::string> notes{};

  bool passed() const {
    for (const auto& c : checks) {
      if (!c.passed()) return false;
    }
    return true;
  }
};

struct SuiteRanges {
  int m_max = 6;
  int n_max = 5;
  int t_max = 6;
  int k_max = 4;  // extra cars beyond n for the t = n-1 suite
};

inline std::string list_str(std::span<const int> prefs) {
  std::string s = "(";
  for (std::size_t i = 0; i < prefs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(prefs[i]);
  }
  return s + ")";
}

/// Runs `check(result, prefs)` on every list of [n]^m across workers.
template <class Check>
CheckResult check_all_lists(const std::string& name, int m, int n,
                            const SearchOptions& opts, Check check) {
  auto res = fold_all_lists(
      m, n, opts, [&] { return CheckResult{name}; },
      [check](CheckResult& acc, std::span<const int> prefs) { check(acc, prefs); },
      [](CheckResult& a, const CheckResult& b) { a.merge(b); });
  return res;
}

inline std::string cell_str(int m, int n, int t) {
  return "m=" + std::to_string(m) + " n=" + std::to_string(n) + " t=" + std::to_string(t);
}

inline std::string outcome_str(const ParkingOutcome& o) {
  std::string s = "(";
  for (std::size_t i = 0; i < o.size(); ++i) {
    if (i) s += ',';
    s += o.failed(i) ? std::string("X") : std::to_string(o.slots[i]);
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

inline SuiteResult run_characterizations(const SuiteRanges& r, const SearchOptions& opts) {
  SuiteResult suite{"characterizations"};

  CheckResult lace{"lace criterion == simulation (t=1, m<=n)"};
  CheckResult displaced{"non-first lace entries == cars displaced by one (t=1, m<=n)"};
  for (int n = 1; n <= r.n_max; ++n) {
    for (int m = 1; m <= n; ++m) {
      lace.merge(check_all_lists(lace.name, m, n, opts, [m, n](CheckResult& acc, auto p) {
        const bool want = is_mpf({m, n, 1}, p);
        acc.record(is_t1_by_lace(n, p) == want, [&] { return list_str(p) + " n=" + std::to_string(n); });
      }));
      displaced.merge(check_all_lists(displaced.name, m, n, opts, [m, n](CheckResult& acc, auto p) {
        const auto out = simulate_metered({m, n, 1}, p);
        std::vector<int> moved;
        for (int i = 0; i < m; ++i) {
          if (!out.failed(i) && out.slots[i] - p[i] == 1) moved.push_back(i + 1);
        }
        // Cars that failed were pushed past n, i.e. they were also displaced.
        std::vector<int> pushed = moved;
        for (int i = 0; i < m; ++i) {
          if (out.failed(i)) pushed.push_back(i + 1);
        }
        std::sort(pushed.begin(), pushed.end());
        acc.record(displaced_indices(p) == pushed, [&] { return list_str(p) + " n=" + std::to_string(n); });
      }));
    }
  }
  suite.checks.push_back(lace);
  suite.checks.push_back(displaced);

  CheckResult aset{"A-set is [k] and splits into shuffle parts (m<=n)"};
  for (int n = 1; n <= r.n_max; ++n) {
    for (int m = 1; m <= n; ++m) {
      aset.merge(check_all_lists(aset.name, m - 1, n, opts, [m, n](CheckResult& acc, auto s) {
        std::vector<int> full(static_cast<std::size_t>(m));
        std::copy(s.begin(), s.end(), full.begin() + 1);
        const int k = a_set_max(n, s);
        bool ok = true;
        for (int j = 1; j <= n; ++j) {
          full[0] = j;
          ok &= is_pf_by_rearrangement(m, n, full) == (j <= k);
        }
        if (k >= 1) ok &= shuffle_split_valid(m, n, *classify_shuffle(m, n, s));
        acc.record(ok, [&] { return list_str(s) + " n=" + std::to_string(n); });
      }));
    }
  }
  suite.checks.push_back(aset);

  CheckResult shuffle{"shuffle criterion == simulation (t=m-2, 2<m<=n+1)"};
  for (int n = 1; n <= r.n_max; ++n) {
    for (int m = 3; m <= n + 1; ++m) {
      shuffle.merge(check_all_lists(shuffle.name, m, n, opts, [m, n](CheckResult& acc, auto p) {
        acc.record(is_m2_metered(n, p) == is_mpf({m, n, m - 2}, p),
                   [&] { return list_str(p) + " n=" + std::to_string(n); });
      }));
    }
  }
  suite.checks.push_back(shuffle);

  CheckResult periodic{"periodic criterion == simulation (t=n-1)"};
  CheckResult period{"member outcomes repeat the first n spots"};
  for (int n = 1; n <= r.n_max; ++n) {
    for (int m = 1; m <= n + r.k_max; ++m) {
      periodic.merge(check_all_lists(periodic.name, m, n, opts, [m, n](CheckResult& acc, auto p) {
        acc.record(is_n1_metered(n, p) == is_mpf({m, n, n - 1}, p),
                   [&] { return list_str(p) + " n=" + std::to_string(n); });
      }));
      if (m <= n) continue;
      period.merge(check_all_lists(period.name, m, n, opts, [m, n](CheckResult& acc, auto p) {
        const auto out = simulate_metered({m, n, n - 1}, p);
        if (!out.all_parked()) return;
        bool ok = true;
        for (int i = n; i < m; ++i) ok &= out.slots[i] == out.slots[i % n];
        acc.record(ok, [&] { return list_str(p) + " -> " + outcome_str(out); });
      }));
    }
  }
  suite.checks.push_back(periodic);
  suite.checks.push_back(period);
  return suite;
}

// ---------------------------------------------------------------------------

inline SuiteResult run_formulas(const SuiteRanges& r, const SearchOptions& opts) {
  SuiteResult suite{"formulas"};
  const auto eq = [](CheckResult& c, const Count& got, const Count& want,
                     const std::string& what) {
    c.record(got == want, [&] { return what + ": " + got.str() + " != " + want.str(); });
  };

  CheckResult dispatch{"dispatched formulas == brute force"};
  for (int m = 1; m <= r.m_max; ++m) {
    for (int n = 1; n <= r.n_max; ++n) {
      for (int t = 0; t <= r.t_max; ++t) {
        if (auto f = formula_count(m, n, t, opts.workers)) {
          eq(dispatch, f->value, brute_count(m, n, t, opts),
             cell_str(m, n, t) + " via " + method_name(f->method));
        }
      }
    }
  }
  suite.checks.push_back(dispatch);

  CheckResult t1{"t=1 formulas"};
  for (int n = 1; n <= r.n_max; ++n) {
    for (int m = 1; m <= std::min(n + 1, r.m_max); ++m) {
      eq(t1, count_t1_recursive(m, n), brute_count(m, n, 1, opts), "recursion " + cell_str(m, n, 1));
    }
  }
  for (int n = 3; n <= std::max(r.n_max, 3) + 1; ++n) {
    eq(t1, count_t1_diag_closed(n), count_t1_recursive(n, n), "diagonal n=" + std::to_string(n));
    for (int m = 0; m <= n + 1; ++m) {
      try {
        eq(t1, count_t1_binet(m, n), count_t1_recursive(m, n), "closed form " + cell_str(m, n, 1));
      } catch (const NumericalError& e) {
        t1.record(false, [&] { return std::string(e.what()); });
      }
    }
  }
  for (int m = 3; m <= r.m_max; ++m) eq(t1, count_t1_n2(m), brute_count(m, 2, 1, opts), "two spots m=" + std::to_string(m));
  for (int n = 2; n <= r.n_max; ++n) eq(t1, count_t1_row3(n), brute_count(3, n, 1, opts), "three cars n=" + std::to_string(n));
  suite.checks.push_back(t1);

  CheckResult last{"last-car spot counts (t=1)"};
  for (int n = 1; n <= std::min(r.n_max, 6); ++n) {
    for (int m = 1; m <= n; ++m) {
      const Count at_n = count_last_parks_at(m, n, n, opts);
      eq(last, at_n, m == 1 ? Count(1) : count_t1_recursive(m - 1, n),
         "spot n " + cell_str(m, n, 1));
      for (int j = m; j < n; ++j) {
        eq(last, count_last_parks_at(m, n, j, opts), at_n, "uniform spots " + cell_str(m, n, 1));
      }
    }
  }
  suite.checks.push_back(last);

  CheckResult shuffle{"shuffle class sizes and first-entry counts"};
  for (int n = 1; n <= r.n_max; ++n) {
    for (int m = 1; m <= n; ++m) {
      using Hist = std::vector<std::uint64_t>;
      const auto hist = fold_all_lists(
          m - 1, n, opts, [n] { return Hist(static_cast<std::size_t>(n) + 1, 0); },
          [n](Hist& h, std::span<const int> s) { ++h[a_set_max(n, s)]; },
          [](Hist& a, const Hist& b) {
            for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
          });
      const auto first = fold_all_lists(
          m, n, opts, [n] { return Hist(static_cast<std::size_t>(n) + 1, 0); },
          [m, n](Hist& h, std::span<const int> p) {
            if (is_pf_by_rearrangement(m, n, p)) ++h[p[0]];
          },
          [](Hist& a, const Hist& b) {
            for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
          });
      Count total = 0;
      for (int k = 1; k <= n; ++k) {
        eq(shuffle, shuffle_count(m, n, k), Count(hist[k]),
           "class size m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" + std::to_string(k));
        eq(shuffle, count_pf_first_entry(m, n, k), Count(first[k]),
           "first entry m=" + std::to_string(m) + " n=" + std::to_string(n) + " j=" + std::to_string(k));
        total += count_pf_first_entry(m, n, k);
      }
      eq(shuffle, total, classical_pf_count(m, n), "first-entry total m=" + std::to_string(m));
    }
  }
  suite.checks.push_back(shuffle);

  CheckResult m2{"t=m-2 formulas"};
  for (int n = 1; n <= r.n_max; ++n) {
    for (int m = 3; m <= std::min(n + 1, r.m_max); ++m) {
      eq(m2, count_m2(m, n), brute_count(m, n, m - 2, opts), "triple sum " + cell_str(m, n, m - 2));
    }
  }
  for (int m = 3; m <= r.m_max + 1; ++m) {
    eq(m2, count_m2_street_minus_one(m), count_m2(m, m - 1), "street minus one m=" + std::to_string(m));
  }
  for (int len = 1; len <= std::min(r.n_max, 6); ++len) {
    const auto firsts = fold_all_lists(
        len, len, opts, [] { return std::uint64_t{0}; },
        [len](std::uint64_t& acc, std::span<const int> p) {
          if (is_pf_by_rearrangement(len, len, p)) acc += p[0];
        },
        [](std::uint64_t& a, std::uint64_t b) { a += b; });
    eq(m2, count_m2_street_minus_one(len + 1), Count(firsts),
       "sum of first entries, length " + std::to_string(len));
  }
  suite.checks.push_back(m2);

  CheckResult n1{"t=n-1 formulas"};
  for (int n = 1; n <= std::min(r.n_max, 7); ++n) {
    Count sum = 0;
    std::vector<int> pi(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pi[i] = i + 1;
    do {
      sum += outcome_pf_count(OutcomePermutation(pi));
    } while (std::next_permutation(pi.begin(), pi.end()));
    eq(n1, sum, classical_pf_count(n, n), "outcome partition n=" + std::to_string(n));
    if (n >= 2) {
      eq(n1, count(n - 1, n, n - 1, opts).value, 2 * unit_pow(n + 1, n - 2),
         "one car short n=" + std::to_string(n));
      Count first_sum = 0;
      for (int j = 1; j <= n; ++j) first_sum += Count(j) * count_pf_first_entry(n, n, j);
      eq(n1, count_n1(n, 1, opts.workers), first_sum, "one extra car n=" + std::to_string(n));
    }
  }
  for (int n = 1; n <= std::min(r.n_max, 5); ++n) {
    std::map<std::vector<int>, std::uint64_t> by_outcome;
    Odometer odo(n, n);
    do {
      const auto out = simulate_classical({n, n, 0}, odo.value());
      if (out.all_parked()) ++by_outcome[out.slots];
    } while (odo.next());
    for (const auto& [outcome, hits] : by_outcome) {
      eq(n1, outcome_pf_count(OutcomePermutation(outcome)), Count(hits),
         "outcome count " + list_str(outcome));
    }
  }
  for (int n = 1; n <= std::min(r.n_max, 5); ++n) {
    for (int k = 1; k <= 3; ++k) {
      eq(n1, count_n1(n, k, opts.workers), brute_count(n + k, n, n - 1, opts),
         "permutation sum " + cell_str(n + k, n, n - 1));
    }
  }
  suite.checks.push_back(n1);

  CheckResult lucky{"lucky-car formulas"};
  for (int m = 2; m <= std::min(r.m_max, 6); ++m) {
    for (int n = 2; n <= std::min(r.n_max, 6); ++n) {
      for (int t = 1; t <= m - 1; ++t) {
        const auto hist = lucky_histogram(m, n, t, opts);
        eq(lucky, formula_one_lucky(m, n, t), hist[1], "one lucky " + cell_str(m, n, t));
        eq(lucky, formula_all_lucky(m, n, t), hist[m], "all lucky " + cell_str(m, n, t));
      }
    }
  }
  suite.checks.push_back(lucky);
  return suite;
}

// ---------------------------------------------------------------------------

inline SuiteResult run_invariants(const SuiteRanges& r, const SearchOptions& opts) {
  SuiteResult suite{"invariants"};
  CheckResult per_list{"per-list properties"};
  CheckResult counts{"count laws"};

  for (int m = 1; m <= r.m_max; ++m) {
    for (int n = 1; n <= r.n_max; ++n) {
      std::vector<Count> by_t;
      for (int t = 0; t <= r.t_max; ++t) {
        const ParkingInstance inst{m, n, t};
        per_list.merge(check_all_lists(per_list.name, m, n, opts, [inst](CheckResult& acc, auto p) {
          const int m = inst.cars, n = inst.spots, t = inst.meter;
          const auto out = simulate_metered(inst, p);
          const bool member = out.all_parked();
          const auto who = [&] { return list_str(p) + " " + cell_str(m, n, t) + " -> " + outcome_str(out); };
          if (t >= 1) {
            bool ok = true;
            for (int i = 0; i < m; ++i) {
              if (out.failed(i)) {
                ok &= p[i] >= n - t + 1;
              } else {
                ok &= out.slots[i] - p[i] <= t;
              }
            }
            acc.record(ok, who);
          }
          if (t >= m - 1 && n >= m) acc.record(out == simulate_classical(inst, p), who);
          if (m <= n && is_pf_by_rearrangement(m, n, p)) acc.record(member, who);
          if (m <= n) acc.record(is_pf_by_rearrangement(m, n, p) == simulate_classical(inst, p).all_parked(), who);
          if (member) acc.record(window_condition(inst, p), who);
          if (member && m > 1) acc.record(is_mpf({m - 1, n, t}, p.first(m - 1)), who);
          if (member && t == 1 && m <= n) {
            std::vector<int> longer(p.begin(), p.end());
            longer.push_back(0);
            for (int v = 1; v <= n - 1; ++v) {
              longer.back() = v;
              acc.record(is_mpf({m + 1, n, 1}, longer), who);
            }
          }
          acc.record(expand(lace_decompose(p)) == std::vector<int>(p.begin(), p.end()), who);
        }));
        by_t.push_back(brute_count(m, n, t, opts));
        const Count& c = by_t.back();
        const std::string where = cell_str(m, n, t) + " count " + c.str();
        if (n > t) counts.record(c >= unit_pow(n - t, m), [&] { return "lower bound " + where; });
        if (m > n && t >= n) counts.record(c == 0, [&] { return "zero law " + where; });
      }
      for (int t1 = 0; t1 <= r.t_max; ++t1) {
        for (int t2 = t1 + 1; t2 <= r.t_max; ++t2) {
          if (t1 >= m - 1 && n >= m) {
            counts.record(by_t[t1] == by_t[t2], [&] {
              return "stability " + cell_str(m, n, t1) + " vs t=" + std::to_string(t2);
            });
          }
        }
      }
    }
  }
  suite.checks.push_back(per_list);
  suite.checks.push_back(counts);
  return suite;
}

inline SuiteResult run_conjecture(const SuiteRanges& r, const SearchOptions& opts,
                                  ConjectureReport* report_out = nullptr) {
  SuiteResult suite{"conjecture", true};
  const auto rep = check_monotone_conjecture(r.m_max, r.n_max, r.t_max, opts);
  CheckResult c{"mpf non-increasing in t"};
  c.checks = rep.cells;
  for (const auto& v : rep.violations) {
    ++c.failures;
    if (c.samples.size() < 5) {
      c.samples.push_back("m=" + std::to_string(v.m) + " n=" + std::to_string(v.n) +
                          ": t=" + std::to_string(v.t1) + " gives " + v.lower_meter_count.str() +
                          " < t=" + std::to_string(v.t2) + " gives " + v.higher_meter_count.str());
    }
  }
  suite.checks.push_back(c);
  suite.notes.push_back(rep.violations.empty() ? "no violations"
                                               : std::to_string(rep.violations.size()) + " violations");
  if (report_out) *report_out = rep;
  return suite;
}

}  // namespace meterpark
