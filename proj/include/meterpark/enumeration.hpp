#pragma once

// Counting by search or by formula, plus lucky-car histograms and tables.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "meterpark/count.hpp"
#include "meterpark/errors.hpp"
#include "meterpark/lace.hpp"
#include "meterpark/parksim.hpp"
#include "meterpark/periodic.hpp"
#include "meterpark/search.hpp"
#include "meterpark/shuffle.hpp"

namespace meterpark {

enum class Method {
  brute,
  t0,
  classical,
  zero,
  m2cars,
  t1_recursion,
  t1_closed,
  m_minus_2,
  n_minus_1,
  lucky_one,
  lucky_all,
};

inline const char* method_name(Method m) {
  switch (m) {
    case Method::brute: return "brute";
    case Method::t0: return "t0";
    case Method::classical: return "classical";
    case Method::zero: return "zero";
    case Method::m2cars: return "m2cars";
    case Method::t1_recursion: return "t1-recursion";
    case Method::t1_closed: return "t1-closed";
    case Method::m_minus_2: return "m-minus-2";
    case Method::n_minus_1: return "n-minus-1";
    case Method::lucky_one: return "lucky-one";
    case Method::lucky_all: return "lucky-all";
  }
  return "?";
}

struct CountResult {
  Count value;
  Method method = Method::brute;
};

inline void check_params(int m, int n, int t) {
  if (m < 1 || n < 1 || t < 0) {
    throw InputError("counts require m >= 1, n >= 1, t >= 0 (got m=" +
                     std::to_string(m) + ", n=" + std::to_string(n) + ", t=" +
                     std::to_string(t) + ")");
  }
}

/// mpf_{m,n}(t) by simulating every list in [n]^m.
inline Count brute_count(int m, int n, int t, const SearchOptions& opts = {}) {
  check_params(m, n, t);
  struct Visit {
    MeteredParker parker;
    std::vector<int> out;
    void operator()(std::uint64_t& acc, std::span<const int> prefs) {
      if (parker.parks_all(prefs, out)) ++acc;
    }
  };
  const auto hits = fold_all_lists(
      m, n, opts, [] { return std::uint64_t{0}; },
      Visit{MeteredParker(n, t), std::vector<int>(static_cast<std::size_t>(m))},
      [](std::uint64_t& a, std::uint64_t b) { a += b; });
  return Count(hits);
}

/// histogram[k] = number of t-metered (m,n)-parking functions with exactly
/// k lucky cars.
inline std::vector<Count> lucky_histogram(int m, int n, int t,
                                          const SearchOptions& opts = {}) {
  check_params(m, n, t);
  using Hist = std::vector<std::uint64_t>;
  struct Visit {
    MeteredParker parker;
    std::vector<int> out;
    void operator()(Hist& acc, std::span<const int> prefs) {
      if (!parker.parks_all(prefs, out)) return;
      std::size_t lucky = 0;
      for (std::size_t i = 0; i < prefs.size(); ++i) lucky += out[i] == prefs[i];
      ++acc[lucky];
    }
  };
  const auto hist = fold_all_lists(
      m, n, opts, [m] { return Hist(static_cast<std::size_t>(m) + 1, 0); },
      Visit{MeteredParker(n, t), std::vector<int>(static_cast<std::size_t>(m))},
      [](Hist& a, const Hist& b) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
      });
  return {hist.begin(), hist.end()};
}

inline Count count_lucky_exact(int m, int n, int t, int k,
                               const SearchOptions& opts = {}) {
  if (k < 0 || k > m) throw InputError("lucky count k must lie in [0, m]");
  return lucky_histogram(m, n, t, opts)[static_cast<std::size_t>(k)];
}

/// Members with exactly one lucky car: (t-1)! (n-m+1) t^{m-t}, zero when
/// n-m+1 <= 0. Requires m, n >= 2 and 1 <= t <= m-1.
inline Count formula_one_lucky(int m, int n, int t) {
  if (m < 2 || n < 2 || t < 1 || t > m - 1) {
    throw DomainError("one-lucky formula requires m, n >= 2 and 1 <= t <= m-1");
  }
  if (n - m + 1 <= 0) return 0;
  return factorial(t - 1) * Count(n - m + 1) * unit_pow(t, m - t);
}

/// Members with all m cars lucky: n!/(n-t)! (n-t)^{m-t}. Requires m, n >= 2 and
/// 1 <= t <= m-1; for t > n the falling factorial vanishes.
inline Count formula_all_lucky(int m, int n, int t) {
  if (m < 2 || n < 2 || t < 1 || t > m - 1) {
    throw DomainError("all-lucky formula requires m, n >= 2 and 1 <= t <= m-1");
  }
  const Count falling = falling_factorial(n, t);
  if (falling == 0) return 0;
  return falling * unit_pow(n - t, m - t);
}

/// The first closed-form rule that applies to (m, n, t), if any.
inline std::optional<CountResult> formula_count(int m, int n, int t,
                                                unsigned workers = 0) {
  check_params(m, n, t);
  if (t == 0) return CountResult{unit_pow(n, m), Method::t0};
  if (m > n && t >= n) return CountResult{0, Method::zero};
  if (t >= m - 1 && n >= m) return CountResult{classical_pf_count(m, n), Method::classical};
  if (m == 2 && t >= 1) return CountResult{Count(n) * n - 1, Method::m2cars};
  if (t == 1 && m <= n + 1) return CountResult{count_t1_recursive(m, n), Method::t1_recursion};
  if (t == m - 2 && m > 2 && m <= n + 1) return CountResult{count_m2(m, n), Method::m_minus_2};
  if (t == n - 1 && m > n) return CountResult{count_n1(n, m - n, workers), Method::n_minus_1};
  return std::nullopt;
}

/// Formula when one applies, exhaustive search otherwise.
inline CountResult count(int m, int n, int t, const SearchOptions& opts = {}) {
  if (auto f = formula_count(m, n, t, opts.workers)) return *f;
  return CountResult{brute_count(m, n, t, opts), Method::brute};
}

// ---------------------------------------------------------------------------
// Tables

struct TableRule {
  enum class Kind { fixed, m_minus_2, n_minus_1, diag_t };
  Kind kind = Kind::fixed;
  int meter = 0;  // only for fixed

  static TableRule parse(const std::string& text) {
    if (text == "m-2") return {Kind::m_minus_2, 0};
    if (text == "n-1") return {Kind::n_minus_1, 0};
    if (text == "diag-t") return {Kind::diag_t, 0};
    const std::string prefix = "fixed:";
    if (text.rfind(prefix, 0) == 0) {
      const std::string num = text.substr(prefix.size());
      if (!num.empty() && num.find_first_not_of("0123456789") == std::string::npos &&
          num.size() < 9) {
        return {Kind::fixed, std::stoi(num)};
      }
    }
    throw InputError("unknown t-rule '" + text +
                     "' (expected fixed:<t>, m-2, n-1 or diag-t)");
  }

  std::string str() const {
    switch (kind) {
      case Kind::fixed: return "fixed:" + std::to_string(meter);
      case Kind::m_minus_2: return "m-2";
      case Kind::n_minus_1: return "n-1";
      case Kind::diag_t: return "diag-t";
    }
    return "?";
  }

  /// Row label: t for the diagonal table, m otherwise.
  const char* row_label() const { return kind == Kind::diag_t ? "t" : "m"; }

  struct Params {
    int cars, spots, meter;
  };
  Params resolve(int row, int col) const {
    switch (kind) {
      case Kind::fixed: return {row, col, meter};
      case Kind::m_minus_2: return {row, col, row - 2};
      case Kind::n_minus_1: return {row, col, col - 1};
      case Kind::diag_t: return {col, col, row};
    }
    return {row, col, meter};
  }
};

struct TableCell {
  int row = 0, col = 0;
  int cars = 0, spots = 0, meter = 0;
  Count value;
  Method method = Method::brute;
  // Set for cells where the rule gives no meaningful meter (t = m-2 at m = 1);
  // such cells carry value 0.
  bool structural = false;
};

struct TableGrid {
  TableRule rule;
  int row_max = 0, col_max = 0;
  std::vector<std::vector<TableCell>> cells;  // [row-1][col-1]

  const TableCell& at(int row, int col) const { return cells[row - 1][col - 1]; }
};

enum class TableMethod { brute, formula, both };

inline TableMethod parse_table_method(const std::string& s) {
  if (s == "brute") return TableMethod::brute;
  if (s == "formula") return TableMethod::formula;
  if (s == "both") return TableMethod::both;
  throw InputError("unknown table method '" + s + "'");
}

inline std::string cell_label(const TableCell& c) {
  return "(m=" + std::to_string(c.cars) + ", n=" + std::to_string(c.spots) +
         ", t=" + std::to_string(c.meter) + ")";
}

/// Grid over rows [1, row_max] and columns [1, col_max]. With `both`, every
/// formula-backed cell is also brute-forced and a mismatch throws
/// VerificationError naming the cell.
inline TableGrid build_table(const TableRule& rule, int row_max, int col_max,
                             TableMethod method, const SearchOptions& opts = {}) {
  if (row_max < 1 || col_max < 1) throw InputError("table ranges must be >= 1");
  if (rule.kind == TableRule::Kind::fixed && rule.meter < 0) {
    throw InputError("fixed meter must be >= 0");
  }
  TableGrid grid{rule, row_max, col_max, {}};
  for (int r = 1; r <= row_max; ++r) {
    auto& row = grid.cells.emplace_back();
    for (int c = 1; c <= col_max; ++c) {
      const auto p = rule.resolve(r, c);
      TableCell cell{r, c, p.cars, p.spots, p.meter, 0, Method::zero, false};
      if (p.meter < 0) {
        cell.structural = true;
        row.push_back(cell);
        continue;
      }
      if (method == TableMethod::brute) {
        cell.value = brute_count(p.cars, p.spots, p.meter, opts);
        cell.method = Method::brute;
      } else if (auto f = formula_count(p.cars, p.spots, p.meter, opts.workers)) {
        cell.value = f->value;
        cell.method = f->method;
        if (method == TableMethod::both) {
          const Count b = brute_count(p.cars, p.spots, p.meter, opts);
          if (b != f->value) {
            throw VerificationError("cell " + cell_label(cell) + ": " +
                                    method_name(f->method) + " gives " +
                                    f->value.str() + " but brute force gives " +
                                    b.str());
          }
        }
      } else {
        cell.value = brute_count(p.cars, p.spots, p.meter, opts);
        cell.method = Method::brute;
      }
      row.push_back(cell);
    }
  }
  return grid;
}

// ---------------------------------------------------------------------------
// Monotonicity in t (open conjecture: mpf(t2) <= mpf(t1) for t1 < t2)

struct MonotoneViolation {
  int m, n, t1, t2;
  Count lower_meter_count, higher_meter_count;
};

struct ConjectureReport {
  int m_max = 0, n_max = 0, t_max = 0;
  std::size_t cells = 0;
  std::vector<MonotoneViolation> violations;
};

/// Brute-forces every (m, n, t) with m <= m_max, n <= n_max, 0 <= t <= t_max
/// and lists all pairs t1 < t2 where the count increases.
inline ConjectureReport check_monotone_conjecture(int m_max, int n_max, int t_max,
                                                  const SearchOptions& opts = {}) {
  if (m_max < 1 || n_max < 1 || t_max < 0) throw InputError("bad conjecture grid");
  ConjectureReport rep{m_max, n_max, t_max, 0, {}};
  for (int m = 1; m <= m_max; ++m) {
    for (int n = 1; n <= n_max; ++n) {
      std::vector<Count> by_t;
      for (int t = 0; t <= t_max; ++t) {
        by_t.push_back(brute_count(m, n, t, opts));
        ++rep.cells;
      }
      for (int t1 = 0; t1 <= t_max; ++t1) {
        for (int t2 = t1 + 1; t2 <= t_max; ++t2) {
          if (by_t[t2] > by_t[t1]) {
            rep.violations.push_back({m, n, t1, t2, by_t[t1], by_t[t2]});
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace meterpark
