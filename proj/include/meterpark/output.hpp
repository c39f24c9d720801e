#pragma once

// Renderings shared by the CLI and its tests. Counts are
// always written as decimal strings; a failed car is written as "X".

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "meterpark/enumeration.hpp"
#include "meterpark/parksim.hpp"

namespace meterpark {

inline constexpr const char* kSchemaVersion = "1";

inline std::string format_outcome(const ParkingOutcome& outcome) {
  std::string s;
  for (std::size_t i = 0; i < outcome.size(); ++i) {
    if (i) s += ',';
    s += outcome.failed(i) ? std::string("X") : std::to_string(outcome.slots[i]);
  }
  return s;
}

inline nlohmann::json outcome_json(const ParkingOutcome& outcome) {
  auto arr = nlohmann::json::array();
  for (std::size_t i = 0; i < outcome.size(); ++i) {
    if (outcome.failed(i)) {
      arr.push_back("X");
    } else {
      arr.push_back(outcome.slots[i]);
    }
  }
  return arr;
}

inline nlohmann::json make_record(const std::string& command,
                                  nlohmann::json parameters,
                                  nlohmann::json results) {
  nlohmann::json rec;
  rec["schema_version"] = kSchemaVersion;
  rec["command"] = command;
  rec["parameters"] = std::move(parameters);
  rec["results"] = std::move(results);
  return rec;
}

/// Header "m\n,1,2,...", then one row per m (or t for the diagonal table).
inline std::string table_to_csv(const TableGrid& grid) {
  std::ostringstream os;
  os << grid.rule.row_label() << "\\n";
  for (int c = 1; c <= grid.col_max; ++c) os << ',' << c;
  os << '\n';
  for (int r = 1; r <= grid.row_max; ++r) {
    os << r;
    for (int c = 1; c <= grid.col_max; ++c) os << ',' << grid.at(r, c).value;
    os << '\n';
  }
  return os.str();
}

inline nlohmann::json table_to_json(const TableGrid& grid) {
  nlohmann::json j;
  j["t_rule"] = grid.rule.str();
  j["row_label"] = grid.rule.row_label();
  auto rows = nlohmann::json::array(), cols = nlohmann::json::array();
  for (int r = 1; r <= grid.row_max; ++r) rows.push_back(r);
  for (int c = 1; c <= grid.col_max; ++c) cols.push_back(c);
  j["rows"] = rows;
  j["cols"] = cols;
  auto cells = nlohmann::json::array(), methods = nlohmann::json::array();
  auto structural = nlohmann::json::array();
  for (int r = 1; r <= grid.row_max; ++r) {
    auto vrow = nlohmann::json::array(), mrow = nlohmann::json::array();
    for (int c = 1; c <= grid.col_max; ++c) {
      const auto& cell = grid.at(r, c);
      vrow.push_back(cell.value.str());
      mrow.push_back(cell.structural ? "structural" : method_name(cell.method));
      if (cell.structural) structural.push_back({r, c});
    }
    cells.push_back(vrow);
    methods.push_back(mrow);
  }
  j["cells"] = cells;
  j["methods"] = methods;
  j["structural_cells"] = structural;
  return j;
}

inline std::string table_caption(const TableGrid& grid) {
  using K = TableRule::Kind;
  switch (grid.rule.kind) {
    case K::fixed:
      return "Number of " + std::to_string(grid.rule.meter) +
             "-metered (m,n)-parking functions (rows m, columns n)";
    case K::m_minus_2:
      return "Number of (m-2)-metered (m,n)-parking functions (rows m, columns n)";
    case K::n_minus_1:
      return "Number of (n-1)-metered (m,n)-parking functions (rows m, columns n)";
    case K::diag_t:
      return "Number of t-metered (n,n)-parking functions (rows t, columns n)";
  }
  return "";
}

inline std::string table_to_pretty(const TableGrid& grid) {
  std::vector<std::vector<std::string>> text;
  std::vector<std::string> header{std::string(grid.rule.row_label()) + "\\n"};
  for (int c = 1; c <= grid.col_max; ++c) header.push_back(std::to_string(c));
  text.push_back(header);
  for (int r = 1; r <= grid.row_max; ++r) {
    std::vector<std::string> line{std::to_string(r)};
    for (int c = 1; c <= grid.col_max; ++c) {
      const auto& cell = grid.at(r, c);
      line.push_back(cell.value.str() + (cell.structural ? "*" : ""));
    }
    text.push_back(line);
  }
  std::vector<std::size_t> width(text[0].size(), 0);
  for (const auto& line : text) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  std::ostringstream os;
  os << table_caption(grid) << '\n';
  for (std::size_t li = 0; li < text.size(); ++li) {
    for (std::size_t i = 0; i < text[li].size(); ++i) {
      os << (i ? " | " : "") << std::string(width[i] - text[li][i].size(), ' ')
         << text[li][i];
    }
    os << '\n';
    if (li == 0) {
      for (std::size_t i = 0; i < width.size(); ++i) {
        os << (i ? "-+-" : "") << std::string(width[i], '-');
      }
      os << '\n';
    }
  }
  bool any_structural = false;
  for (const auto& row : grid.cells) {
    for (const auto& cell : row) any_structural |= cell.structural;
  }
  if (any_structural) os << "* meter would be negative; cell shown as 0\n";
  return os.str();
}

/// Cell values parsed back from CSV text, [row][col] as decimal strings.
inline std::vector<std::vector<std::string>> parse_csv_cells(const std::string& csv) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream is(csv);
  std::string line;
  bool header = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string f;
    while (std::getline(ls, f, ',')) fields.push_back(f);
    fields.erase(fields.begin());
    rows.push_back(fields);
  }
  return rows;
}

inline std::vector<std::vector<std::string>> parse_json_cells(const nlohmann::json& table) {
  return table.at("cells").get<std::vector<std::vector<std::string>>>();
}

}  // namespace meterpark
