#include <gtest/gtest.h>

#include "meterpark/output.hpp"

using namespace meterpark;

TEST(Output, OutcomeUsesX) {
  const ParkingOutcome o{{5, 6, ParkingOutcome::kFail}};
  EXPECT_EQ(format_outcome(o), "5,6,X");
  EXPECT_EQ(outcome_json(o).dump(), R"([5,6,"X"])");
}

TEST(Output, RecordShape) {
  const auto r = make_record("count", {{"m", 1}}, {{"value", "3"}});
  EXPECT_EQ(r.at("schema_version"), "1");
  EXPECT_EQ(r.at("command"), "count");
  EXPECT_EQ(r.at("parameters").at("m"), 1);
  EXPECT_EQ(r.at("results").at("value"), "3");
}

TEST(Output, CsvLayout) {
  const auto g = build_table(TableRule::parse("fixed:1"), 2, 3, TableMethod::formula);
  EXPECT_EQ(table_to_csv(g), "m\\n,1,2,3\n1,1,2,3\n2,0,3,8\n");
  const auto d = build_table(TableRule::parse("diag-t"), 1, 2, TableMethod::formula);
  EXPECT_EQ(table_to_csv(d).substr(0, 3), "t\\n");
}

TEST(Output, CsvAndJsonRoundTrip) {
  for (const char* rule : {"fixed:1", "fixed:2", "m-2", "n-1", "diag-t"}) {
    const auto g = build_table(TableRule::parse(rule), 6, 6, TableMethod::formula);
    const auto from_csv = parse_csv_cells(table_to_csv(g));
    const auto from_json =
        parse_json_cells(nlohmann::json::parse(table_to_json(g).dump()));
    ASSERT_EQ(from_csv.size(), 6u);
    EXPECT_EQ(from_csv, from_json) << rule;
    for (int r = 1; r <= 6; ++r) {
      for (int c = 1; c <= 6; ++c) EXPECT_EQ(from_csv[r - 1][c - 1], g.at(r, c).value.str());
    }
  }
}

TEST(Output, JsonMarksStructuralCells) {
  const auto g = build_table(TableRule::parse("m-2"), 2, 2, TableMethod::formula);
  const auto j = table_to_json(g);
  EXPECT_EQ(j.at("structural_cells").size(), 2u);
  EXPECT_EQ(j.at("methods")[0][0], "structural");
  EXPECT_EQ(j.at("methods")[1][0], "t0");
  EXPECT_EQ(j.at("row_label"), "m");
}

TEST(Output, PrettyHasCaptionAndFootnote) {
  const auto g = build_table(TableRule::parse("m-2"), 3, 3, TableMethod::formula);
  const auto s = table_to_pretty(g);
  EXPECT_NE(s.find("(m-2)-metered"), std::string::npos);
  EXPECT_NE(s.find("0*"), std::string::npos);
  EXPECT_NE(s.find("21"), std::string::npos);
}
