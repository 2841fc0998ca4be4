#include <cmath>

#include <gtest/gtest.h>

#include "dimspec/report.hpp"

using namespace dimspec;

namespace {

std::vector<ScanRecord> mixed_records() {
  std::vector<ScanRecord> out;
  for (auto scheme : {CouplingScheme::MEqualsN, CouplingScheme::MEqualsOne}) {
    const auto part = scan({2, 24}, {1, 6}, scheme);
    out.insert(out.end(), part.begin(), part.end());
  }
  const auto explicit_m = scan({2, 12}, {1, 3}, CouplingScheme::Explicit, 1, 2);
  out.insert(out.end(), explicit_m.begin(), explicit_m.end());
  for (const auto& row : table1_compare()) out.push_back(to_record(row));
  ScanRecord printed_undefined = evaluate_point(SystemParams::make(5, 3, CouplingScheme::MEqualsOne));
  printed_undefined.outcome = e0_scheme_m1(5, 3);
  printed_undefined.formula = Formula::SchemeM1;
  out.push_back(printed_undefined);
  return out;
}

}  // namespace

TEST(Table1, RowsMatchEmbeddedConstants) {
  const auto rows = table1_compare();
  ASSERT_EQ(rows.size(), 10u);
  const double expected[10][3] = {{3, 1, -0.11},     {7, 3, -0.00041},  {8, 3, -6.06e-6},   {9, 3, -1.52e-8},
                                  {10, 3, -1.95e-13}, {11, 3, -9.92e-28}, {11, 5, -1.75e-7},  {12, 5, -3.23e-9},
                                  {18, 5, -5.70e-47}, {19, 5, -4.41e-97}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].D, expected[i][0]);
    EXPECT_EQ(rows[i].n, expected[i][1]);
    EXPECT_EQ(to_decimal_string(rows[i].paper_E0), to_decimal_string(slr(expected[i][2])));
    EXPECT_TRUE(rows[i].computed_E0.is_bound());
    ASSERT_TRUE(rows[i].ratio_log10.has_value());
    EXPECT_TRUE(std::isfinite(*rows[i].ratio_log10));
  }
}

TEST(Table1, OnlyTheHydrogenRowIsHeldToThePrintedValue) {
  const auto rows = table1_compare();
  EXPECT_TRUE(anchor_row_agrees(rows[0]));
  EXPECT_NEAR(rows[0].computed_E0.energy().to_double(), -1.0 / 9.0, 1e-15);
  // (7,3): oracle-confirmed -1.297e-4 against -4.1e-4
  EXPECT_NEAR(rows[1].computed_E0.energy().to_double() / -1.29708125234427e-4, 1.0, 1e-12);
  EXPECT_NEAR(*rows[1].ratio_log10, std::log10(1.29708125234427e-4 / 4.1e-4), 1e-10);
  EXPECT_FALSE(anchor_row_agrees(rows[1]));
}

TEST(Csv, HeaderIsFixed) {
  const auto csv = render_csv({});
  EXPECT_EQ(csv,
            "D,n,m,beta,alpha_sign,alpha_lnmag,E0_sign,E0_lnmag,E0_decimal,classification,formula,paper_E0,"
            "ratio_log10\n");
}

TEST(Csv, BoundRowLayout) {
  const auto csv = render_csv({evaluate_point(SystemParams::make(3, 1, CouplingScheme::MEqualsN))});
  const auto row = csv.substr(csv.find('\n') + 1);
  EXPECT_EQ(row.substr(0, row.find(",-2.19")), "3,1,1,1,1,0,-1");
  EXPECT_NE(row.find(",-1.11e-01,bound,Eq2,-0.11,"), std::string::npos) << row;
}

TEST(Csv, NonBoundRowsLeaveEnergyColumnsEmpty) {
  const auto csv = render_csv({evaluate_point(SystemParams::make(6, 3, CouplingScheme::MEqualsN))});
  EXPECT_NE(csv.find("\n6,3,3,0,0,,,,,logarithmic,Eq2,,\n"), std::string::npos) << csv;
}

TEST(Csv, RoundTripsRecords) {
  const auto records = mixed_records();
  ASSERT_GT(records.size(), 200u);
  const auto parsed = parse_csv(render_csv(records));
  ASSERT_EQ(parsed.size(), records.size());
  for (std::size_t i = 0; i < records.size(); ++i) EXPECT_EQ(parsed[i], records[i]) << i;
  EXPECT_EQ(render_csv(parsed), render_csv(records));
}

TEST(Csv, RejectsMalformedInput) {
  EXPECT_THROW(parse_csv("D,n\n"), Error);
  EXPECT_THROW(parse_csv(std::string(kCsvHeader) + "\n3,1,1\n"), Error);
  EXPECT_THROW(parse_csv(std::string(kCsvHeader) + "\n3,1,1,1,1,0,,,,weird,Eq2,,\n"), Error);
  EXPECT_THROW(parse_csv(std::string(kCsvHeader) + "\n3,1,1,2,1,0,,,,singular,Eq2,,\n"), Error);
  EXPECT_THROW(parse_csv(std::string(kCsvHeader) + "\n3,1,1,1,1,0,,,,bound,Eq2,,\n"), Error);
  EXPECT_THROW(parse_csv(std::string(kCsvHeader) + "\n3,1,1,1,1,x,,,,singular,Eq2,,\n"), Error);
}

TEST(Json, RoundTripsRecords) {
  const auto records = mixed_records();
  const auto parsed = parse_json(render_json(records));
  ASSERT_EQ(parsed.size(), records.size());
  for (std::size_t i = 0; i < records.size(); ++i) EXPECT_EQ(parsed[i], records[i]) << i;
}

TEST(Json, SchemaUsesCsvKeysAndTypes) {
  const auto j = to_json(evaluate_point(SystemParams::make(7, 3, CouplingScheme::MEqualsN)));
  for (const char* key : {"D", "n", "m", "beta", "alpha_sign", "alpha_lnmag", "E0_sign", "E0_lnmag", "E0_decimal",
                          "classification", "formula", "paper_E0", "ratio_log10"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j.size(), 13u);
  EXPECT_TRUE(j["E0_sign"].is_number_integer());
  EXPECT_TRUE(j["alpha_lnmag"].is_number_float());
  EXPECT_EQ(j["classification"], "bound");
  EXPECT_EQ(j["E0_decimal"], "-1.30e-04");
  EXPECT_DOUBLE_EQ(j["paper_E0"].get<double>(), -0.00041);

  const auto singular = to_json(evaluate_point(SystemParams::make(13, 3, CouplingScheme::MEqualsN)));
  EXPECT_TRUE(singular["E0_lnmag"].is_null());
  EXPECT_TRUE(singular["paper_E0"].is_null());
}

TEST(Json, RejectsMalformedInput) {
  EXPECT_THROW(parse_json("{}"), Error);
  EXPECT_THROW(parse_json("[{\"D\": 3}]"), Error);
  EXPECT_THROW(parse_json("not json"), Error);
}

TEST(Text, AnnotatesPaperOmittedDimension) {
  const auto text = render_text(scan({3, 5}, {3, 3}, CouplingScheme::MEqualsOne));
  EXPECT_NE(text.find("paper-omitted"), std::string::npos);
  EXPECT_EQ(text.find("paper-omitted"), text.rfind("paper-omitted"));
}

TEST(Numbers, ShortestRoundTrip) {
  for (double x : {0.1, -2.1972245773362196, 1e-300, 123456789.123, -4.41e-97}) {
    EXPECT_EQ(parse_double(format_double(x)), x);
  }
  EXPECT_THROW(parse_double("1.0abc"), Error);
  EXPECT_THROW(parse_int("3.5"), Error);
}
