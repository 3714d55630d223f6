#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "relcount/arith.hpp"
#include "relcount/relation.hpp"

namespace relcount {

enum class Rounding { HalfUp, Truncate };

// floor/round of x * 10^decimals as an integer; x must be >= 0.
Nat scaled_digits(const Ratio& x, unsigned decimals, Rounding mode);

// Fixed-point decimal rendering.  With trim_exact, trailing zeros (and a
// trailing dot) are removed when x is exactly representable within the
// requested number of decimals.
std::string format_fixed(const Ratio& x, unsigned decimals, Rounding mode,
                         bool trim_exact = false);

// "dd.ddd %" of the ratio x (i.e. x * 100).
std::string format_percent(const Ratio& x, unsigned decimals, Rounding mode);

// e with 10^e <= x < 10^(e+1); x must be positive.
long exponent_floor_log10(const Ratio& x);

// "m.mmmmmm·10^e" with an unpadded exponent.
std::string format_scientific(const Ratio& x, unsigned mantissa_decimals, Rounding mode);
std::string format_scientific(const Nat& value, unsigned mantissa_decimals, Rounding mode);

enum class TableFormat { Plain, Markdown, Csv };
std::optional<TableFormat> parse_format(std::string_view name);

enum class FigureId {
  Fig1, Fig2, Fig3, Fig4, Fig5, Fig6, Fig7, Fig8,
  KMax, FitLines, KernelScan,
};
std::optional<FigureId> parse_figure(std::string_view name);
std::string_view figure_name(FigureId id);

struct TableSpec {
  FigureId figure;
  TableFormat format = TableFormat::Plain;
  std::optional<std::vector<std::size_t>> ns;  // row override where applicable
  unsigned jobs = 1;
};

// One rendered cell: the styled text used by plain/markdown output and the
// exact undecorated form used by CSV.
struct TableCell {
  std::string display;
  std::string csv;
};

struct Table {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<TableCell>> rows;
};

// The tables making up a figure (some figures are a pair of tables).
std::vector<Table> build_figure(FigureId id,
                                const std::optional<std::vector<std::size_t>>& ns,
                                unsigned jobs = 1);

std::string render_tables(std::span<const Table> tables, TableFormat format);

std::string emit_table(const TableSpec& spec);

// Oracle-versus-formula verification over every in-budget (m, n).
struct VerifyBudget {
  std::size_t max_mn_bits = 20;          // relation families: m*n <= this
  std::uint64_t max_family = 10'000'000; // function families: radix^m <= this
  std::size_t max_hetero_n = 9;          // heterogeneous n cap
  std::size_t perm_max_n = 8;            // permutations/involutions
  std::size_t idem_max_n = 6;            // idempotent/transitive classes
};

struct VerifyReport {
  struct Entry {
    RelationClass c;
    std::size_t m, n;
    bool ok;
    std::string detail;  // set when ok is false
  };
  std::vector<Entry> entries;
  std::size_t mismatches = 0;

  std::string summary() const;
};

VerifyReport run_verify(std::span<const RelationClass> classes,
                        const VerifyBudget& budget = {}, unsigned jobs = 1);

}  // namespace relcount
