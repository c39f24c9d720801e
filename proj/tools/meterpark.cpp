// meterpark: simulate metered parking, count metered parking functions,
// regenerate data tables and run the exhaustive verification suites.
//
// Exit codes: 0 member / pass, 1 non-member, 2 input error, 3 no formula,
// 4 budget refusal, 5 verification mismatch.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "meterpark/meterpark.hpp"

namespace {

using nlohmann::json;
using namespace meterpark;

enum Exit : int {
  kOk = 0,
  kNonMember = 1,
  kInputError = 2,
  kNoFormula = 3,
  kBudget = 4,
  kMismatch = 5,
};

struct Common {
  std::string format;
  std::string out_path;
  unsigned workers = 0;
  std::optional<std::uint64_t> budget;
};

std::uint64_t resolve_budget(const Common& c) {
  if (c.budget) return *c.budget;
  if (const char* env = std::getenv("METERED_PARK_BUDGET")) {
    const std::string s(env);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw InputError("METERED_PARK_BUDGET must be a non-negative integer");
    }
    return std::stoull(s);
  }
  return kDefaultBudget;
}

SearchOptions search_options(const Common& c) { return {c.workers, resolve_budget(c)}; }

void emit(const Common& c, const std::string& text) {
  if (c.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out_path);
  if (!f) throw InputError("cannot write " + c.out_path);
  f << text;
}

std::vector<int> parse_prefs(const std::string& text) {
  std::vector<int> prefs;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos ||
        tok.size() > 9) {
      throw InputError("bad preference '" + tok + "' in --prefs");
    }
    prefs.push_back(std::stoi(tok));
  }
  if (prefs.empty()) throw InputError("--prefs is empty");
  return prefs;
}

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// --- simulate --------------------------------------------------------------

struct SimulateArgs {
  std::optional<int> m;
  int n = 0;
  int t = 0;
  std::string prefs;
  std::string scheme = "metered";
};

int cmd_simulate(const SimulateArgs& a, const Common& c) {
  const auto prefs = parse_prefs(a.prefs);
  const int m = static_cast<int>(prefs.size());
  if (a.m && *a.m != m) {
    throw InputError("--m " + std::to_string(*a.m) + " does not match " +
                     std::to_string(m) + " preferences");
  }
  const ParkingInstance inst{m, a.n, a.t};
  const bool classical = a.scheme == "classical";
  const auto outcome = classical ? simulate_classical(inst, prefs) : simulate_metered(inst, prefs);
  const auto st = statistics(outcome, prefs);
  const bool member = outcome.all_parked();

  if (c.format == "json") {
    json params{{"m", m}, {"n", a.n}, {"prefs", prefs}, {"scheme", a.scheme}};
    if (!classical) params["t"] = a.t;
    json results{{"outcome", outcome_json(outcome)},
                 {"member", member},
                 {"lucky", st.lucky_count},
                 {"displacements", st.displacements},
                 {"total_displacement", st.total_displacement}};
    emit(c, make_record("simulate", params, results).dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "outcome: " << format_outcome(outcome) << '\n'
       << "member: " << (member ? "yes" : "no") << '\n'
       << "lucky: " << st.lucky_count << '\n'
       << "displacements: " << join(st.displacements) << '\n'
       << "total displacement: " << st.total_displacement << '\n';
    emit(c, os.str());
  }
  return member ? kOk : kNonMember;
}

// --- count -----------------------------------------------------------------

struct CountArgs {
  int m = 0, n = 0, t = 0;
  std::string method = "auto";
};

int cmd_count(const CountArgs& a, const Common& c) {
  const auto opts = search_options(c);
  CountResult res;
  if (a.method == "brute") {
    res = {brute_count(a.m, a.n, a.t, opts), Method::brute};
  } else if (a.method == "formula") {
    auto f = formula_count(a.m, a.n, a.t, c.workers);
    if (!f) {
      std::cerr << "no closed formula applies to m=" << a.m << " n=" << a.n
                << " t=" << a.t << '\n';
      return kNoFormula;
    }
    res = *f;
  } else {
    res = count(a.m, a.n, a.t, opts);
  }
  if (c.format == "json") {
    json params{{"m", a.m}, {"n", a.n}, {"t", a.t}, {"method", a.method}};
    json results{{"value", res.value.str()}, {"method", method_name(res.method)}};
    emit(c, make_record("count", params, results).dump(2) + "\n");
  } else {
    emit(c, res.value.str() + " (" + method_name(res.method) + ")\n");
  }
  return kOk;
}

// --- table -----------------------------------------------------------------

struct TableArgs {
  std::string rule;
  int m_max = 7, n_max = 7;
  bool verify = false;
  std::string method = "formula";
};

int cmd_table(const TableArgs& a, const Common& c) {
  const auto rule = TableRule::parse(a.rule);
  const auto method = a.verify ? TableMethod::both : parse_table_method(a.method);
  const auto grid = build_table(rule, a.m_max, a.n_max, method, search_options(c));
  if (c.format == "csv") {
    emit(c, table_to_csv(grid));
  } else if (c.format == "json") {
    json params{{"t_rule", rule.str()}, {"m_max", a.m_max}, {"n_max", a.n_max},
                {"method", a.verify ? "both" : a.method}};
    emit(c, make_record("table", params, table_to_json(grid)).dump(2) + "\n");
  } else {
    emit(c, table_to_pretty(grid));
  }
  return kOk;
}

// --- check -----------------------------------------------------------------

struct CheckArgs {
  std::string suite = "all";
  std::optional<int> m_max, t_max;
  int n_max = 5;
  int k_max = 4;
};

int cmd_check(const CheckArgs& a, const Common& c) {
  const auto opts = search_options(c);
  SuiteRanges r;
  r.n_max = a.n_max;
  r.m_max = a.m_max.value_or(a.n_max);
  r.t_max = a.t_max.value_or(a.n_max);
  r.k_max = a.k_max;

  std::vector<SuiteResult> suites;
  const bool all = a.suite == "all";
  if (all || a.suite == "characterizations") suites.push_back(run_characterizations(r, opts));
  if (all || a.suite == "formulas") suites.push_back(run_formulas(r, opts));
  if (all || a.suite == "invariants") suites.push_back(run_invariants(r, opts));
  if (all || a.suite == "conjecture") suites.push_back(run_conjecture(r, opts));

  bool ok = true;
  for (const auto& s : suites) ok &= s.informational || s.passed();

  if (c.format == "json") {
    json results = json::array();
    for (const auto& s : suites) {
      json checks = json::array();
      for (const auto& ch : s.checks) {
        checks.push_back({{"name", ch.name},
                          {"checks", ch.checks},
                          {"failures", ch.failures},
                          {"samples", ch.samples}});
      }
      results.push_back({{"suite", s.name},
                         {"passed", s.passed()},
                         {"informational", s.informational},
                         {"checks", checks},
                         {"notes", s.notes}});
    }
    json params{{"suite", a.suite}, {"m_max", r.m_max}, {"n_max", r.n_max},
                {"t_max", r.t_max}, {"k_max", r.k_max}};
    emit(c, make_record("check", params, {{"suites", results}, {"passed", ok}}).dump(2) + "\n");
  } else {
    std::ostringstream os;
    for (const auto& s : suites) {
      const char* verdict = s.passed() ? "PASS" : (s.informational ? "REPORT" : "FAIL");
      os << "[" << verdict << "] " << s.name << '\n';
      for (const auto& ch : s.checks) {
        os << "    " << (ch.passed() ? "ok  " : "BAD ") << ch.name << " (" << ch.checks
           << " checks, " << ch.failures << " failures)\n";
        for (const auto& sample : ch.samples) os << "        " << sample << '\n';
      }
      for (const auto& note : s.notes) os << "    " << note << '\n';
    }
    os << (ok ? "all suites passed\n" : "verification FAILED\n");
    emit(c, os.str());
  }
  return ok ? kOk : kMismatch;
}

void add_common(CLI::App* sub, Common& c, std::vector<std::string> formats,
                const std::string& default_format, bool search) {
  c.format = default_format;
  sub->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember(std::move(formats)))
      ->capture_default_str();
  sub->add_option("--out", c.out_path, "Write output to this file instead of stdout");
  if (search) {
    sub->add_option("--workers", c.workers, "Worker threads (0 = all cores)");
    sub->add_option("--budget", c.budget,
                    "Enumeration budget in car-steps (default 1e9, or METERED_PARK_BUDGET)");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metered parking functions: simulation, counting and tables"};
  app.require_subcommand(1);

  Common common;

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Park one preference list");
  simulate->add_option("--m", sim.m, "Number of cars (defaults to the list length)");
  simulate->add_option("--n", sim.n, "Number of spots")->required()->check(CLI::PositiveNumber);
  simulate->add_option("--t", sim.t, "Meter length")->check(CLI::NonNegativeNumber);
  simulate->add_option("--prefs", sim.prefs, "Comma-separated preferences")->required();
  simulate->add_option("--scheme", sim.scheme)
      ->check(CLI::IsMember({"metered", "classical"}))
      ->capture_default_str();

  CountArgs cnt;
  auto* count_cmd = app.add_subcommand("count", "Count t-metered (m,n)-parking functions");
  count_cmd->add_option("--m", cnt.m)->required()->check(CLI::PositiveNumber);
  count_cmd->add_option("--n", cnt.n)->required()->check(CLI::PositiveNumber);
  count_cmd->add_option("--t", cnt.t)->required()->check(CLI::NonNegativeNumber);
  count_cmd->add_option("--method", cnt.method)
      ->check(CLI::IsMember({"auto", "brute", "formula"}))
      ->capture_default_str();

  TableArgs tab;
  auto* table = app.add_subcommand("table", "Regenerate a data table");
  table->add_option("--t-rule", tab.rule, "fixed:<t>, m-2, n-1 or diag-t")->required();
  table->add_option("--m-max", tab.m_max, "Last row (m, or t for diag-t)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  table->add_option("--n-max", tab.n_max, "Last column (n)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  table->add_option("--method", tab.method, "Cell source")
      ->check(CLI::IsMember({"brute", "formula", "both"}))
      ->capture_default_str();
  table->add_flag("--verify", tab.verify, "Compute formula and brute force and compare");

  CheckArgs chk;
  auto* check = app.add_subcommand("check", "Run exhaustive verification suites");
  check->add_option("--suite", chk.suite)
      ->check(CLI::IsMember({"characterizations", "formulas", "invariants", "conjecture", "all"}))
      ->capture_default_str();
  check->add_option("--n-max", chk.n_max)->check(CLI::PositiveNumber)->capture_default_str();
  check->add_option("--m-max", chk.m_max, "Defaults to --n-max")->check(CLI::PositiveNumber);
  check->add_option("--t-max", chk.t_max, "Defaults to --n-max")->check(CLI::NonNegativeNumber);
  check->add_option("--k-max", chk.k_max, "Extra cars beyond n for the t=n-1 suite")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  Common sim_c, cnt_c, tab_c, chk_c;
  add_common(simulate, sim_c, {"text", "json"}, "text", false);
  add_common(count_cmd, cnt_c, {"text", "json"}, "text", true);
  add_common(table, tab_c, {"csv", "json", "pretty"}, "pretty", true);
  add_common(check, chk_c, {"text", "json"}, "text", true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kInputError;
  }

  try {
    if (*simulate) return cmd_simulate(sim, sim_c);
    if (*count_cmd) return cmd_count(cnt, cnt_c);
    if (*table) return cmd_table(tab, tab_c);
    if (*check) return cmd_check(chk, chk_c);
  } catch (const ResourceError& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return kBudget;
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kMismatch;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const DomainError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
