#include <doctest.h>

#include <sstream>

#include "relcount/tables.hpp"

using namespace relcount;

namespace {

std::vector<std::vector<std::string>> parse_csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;  // block separator
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.push_back("");
    rows.push_back(std::move(cells));
  }
  return rows;
}

Ratio parse_ratio(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Ratio(Nat(s));
  return make_ratio(Nat(s.substr(0, slash)), Nat(s.substr(slash + 1)));
}

}  // namespace

TEST_CASE("fixed-point formatting") {
  CHECK(format_percent(make_ratio(2, 3), 5, Rounding::Truncate) == "66.66666 %");
  CHECK(format_percent(make_ratio(2, 3), 5, Rounding::HalfUp) == "66.66667 %");
  CHECK(format_fixed(make_ratio(3, 4), 5, Rounding::Truncate, true) == "0.75");
  CHECK(format_fixed(make_ratio(38, 27), 5, Rounding::Truncate, true) == "1.40740");
  CHECK(format_fixed(make_ratio(2, 1), 5, Rounding::Truncate, true) == "2");
  CHECK(format_fixed(make_ratio(1, 200), 2, Rounding::HalfUp) == "0.01");
  CHECK(format_fixed(Ratio(0), 3, Rounding::HalfUp) == "0.000");
}

TEST_CASE("scientific formatting") {
  CHECK(format_scientific(Nat("6513215599"), 6, Rounding::HalfUp) == "6.513216·10^9");
  CHECK(format_scientific(Nat("6513215599"), 6, Rounding::Truncate) == "6.513215·10^9");
  CHECK(format_scientific(Nat("10000000000"), 6, Rounding::HalfUp) == "1.000000·10^10");
  CHECK(format_scientific(Nat(1), 6, Rounding::HalfUp) == "1.000000·10^0");
  // rounding can carry into the next exponent
  CHECK(format_scientific(Nat("99999995"), 6, Rounding::HalfUp) == "1.000000·10^8");
  CHECK(format_scientific(make_ratio(1, 200), 5, Rounding::Truncate) == "5.00000·10^-3");
  CHECK(exponent_floor_log10(make_ratio(999, 1000)) == -1);
  CHECK(exponent_floor_log10(Ratio(1000)) == 3);
}

TEST_CASE("figure cells") {
  auto fig1 = build_figure(FigureId::Fig1, std::nullopt);
  REQUIRE(fig1.size() == 1);
  const auto& row10 = fig1[0].rows[2];
  CHECK(row10[1].display == "1.000000·10^10");
  CHECK(row10[2].display == "6.513216·10^9");
  CHECK(row10[3].display == "65.132 %");

  auto fig5 = build_figure(FigureId::Fig5, std::nullopt);
  const auto& row7 = fig5[0].rows[6];
  const char* expected[] = {"1854", "1855", "924", "315", "70", "21", "0", "1"};
  for (std::size_t k = 0; k < 8; ++k) CHECK(row7[k + 1].display == expected[k]);

  auto fig8 = build_figure(FigureId::Fig8, std::nullopt);
  const auto& row4 = fig8[0].rows[3];
  CHECK(row4[1].display == "256");
  CHECK(row4[2].display == "216");
  CHECK(row4[3].display == "104");
  CHECK(row4[4].display == "41");
  CHECK(row4[5].display == "0.84375");
}

TEST_CASE("figure parsing") {
  CHECK(parse_figure("fig6") == FigureId::Fig6);
  CHECK(parse_figure("kernelscan") == FigureId::KernelScan);
  CHECK_FALSE(parse_figure("fig9").has_value());
  CHECK(figure_name(FigureId::FitLines) == "fitlines");
  CHECK(parse_format("csv") == TableFormat::Csv);
  CHECK_FALSE(parse_format("tsv").has_value());
}

TEST_CASE("identical invocations render identically") {
  TableSpec spec{FigureId::Fig6, TableFormat::Plain, std::nullopt, 1};
  CHECK(emit_table(spec) == emit_table(spec));
  spec.format = TableFormat::Markdown;
  std::string md = emit_table(spec);
  CHECK(md.find("| --- |") != std::string::npos);
}

TEST_CASE("csv cells round-trip to the exact values") {
  for (FigureId id : {FigureId::Fig1, FigureId::Fig2, FigureId::Fig8}) {
    TableSpec spec{id, TableFormat::Csv, std::nullopt, 1};
    auto tables = build_figure(id, std::nullopt);
    auto parsed = parse_csv(emit_table(spec));
    REQUIRE(!parsed.empty());
    std::size_t row_index = 0;
    for (const Table& table : tables) {
      ++row_index;  // header
      for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          if (row[i].csv.empty()) continue;
          CHECK(parse_ratio(parsed[row_index][i]) == parse_ratio(row[i].csv));
        }
        ++row_index;
      }
    }
  }
}

TEST_CASE("verification on a reduced budget finds no mismatch") {
  VerifyBudget budget;
  budget.max_mn_bits = 12;
  budget.max_hetero_n = 5;
  budget.perm_max_n = 6;
  budget.idem_max_n = 4;
  VerifyReport report = run_verify(kAllClasses, budget);
  CHECK(report.mismatches == 0);
  CHECK(!report.entries.empty());
  CHECK(report.summary().find("0 mismatches") != std::string::npos);
}
