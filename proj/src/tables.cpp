#include "relcount/tables.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "relcount/asymptotics.hpp"
#include "relcount/counting.hpp"
#include "relcount/kernel.hpp"
#include "relcount/oracle.hpp"

namespace relcount {

Nat scaled_digits(const Ratio& x, unsigned decimals, Rounding mode) {
  if (x < 0) throw std::invalid_argument("scaled_digits: negative value");
  Nat num = x.get_num() * pow_nat(10ul, decimals);
  Nat den = x.get_den();
  if (mode == Rounding::HalfUp) return Nat((2 * num + den) / (2 * den));
  return Nat(num / den);
}

std::string format_fixed(const Ratio& x, unsigned decimals, Rounding mode, bool trim_exact) {
  Nat digits = scaled_digits(x, decimals, mode);
  std::string s = digits.get_str();
  if (decimals == 0) return s;
  if (s.size() <= decimals) s.insert(0, decimals + 1 - s.size(), '0');
  s.insert(s.size() - decimals, ".");
  if (trim_exact && make_ratio(digits, pow_nat(10ul, decimals)) == x) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  return s;
}

std::string format_percent(const Ratio& x, unsigned decimals, Rounding mode) {
  return format_fixed(Ratio(x * 100), decimals, mode) + " %";
}

long exponent_floor_log10(const Ratio& x) {
  if (x <= 0) throw std::invalid_argument("exponent_floor_log10: value must be positive");
  const Nat& p = x.get_num();
  const Nat& q = x.get_den();
  long e = static_cast<long>(mpz_sizeinbase(p.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 10));
  auto cmp_pow10 = [&](long ee) {
    if (ee >= 0) return cmp(p, Nat(q * pow_nat(10ul, static_cast<unsigned long>(ee))));
    return cmp(Nat(p * pow_nat(10ul, static_cast<unsigned long>(-ee))), q);
  };
  while (cmp_pow10(e) < 0) --e;
  while (cmp_pow10(e + 1) >= 0) ++e;
  return e;
}

std::string format_scientific(const Ratio& x, unsigned mantissa_decimals, Rounding mode) {
  if (x == 0) return "0";
  long e = exponent_floor_log10(x);
  Ratio mantissa = x;
  if (e >= 0)
    mantissa /= make_ratio(pow_nat(10ul, static_cast<unsigned long>(e)), 1);
  else
    mantissa *= make_ratio(pow_nat(10ul, static_cast<unsigned long>(-e)), 1);
  Nat digits = scaled_digits(mantissa, mantissa_decimals, mode);
  if (digits >= pow_nat(10ul, mantissa_decimals + 1)) {  // rounded up to 10.0…
    digits /= 10;
    ++e;
  }
  std::string s = digits.get_str();
  s.insert(1, ".");
  return s + "\xC2\xB7" + "10^" + std::to_string(e);
}

std::string format_scientific(const Nat& value, unsigned mantissa_decimals, Rounding mode) {
  return format_scientific(make_ratio(value, 1), mantissa_decimals, mode);
}

std::optional<TableFormat> parse_format(std::string_view name) {
  if (name == "plain") return TableFormat::Plain;
  if (name == "markdown") return TableFormat::Markdown;
  if (name == "csv") return TableFormat::Csv;
  return std::nullopt;
}

namespace {

struct FigureNameEntry {
  FigureId id;
  std::string_view name;
};

constexpr FigureNameEntry kFigureNames[] = {
    {FigureId::Fig1, "fig1"}, {FigureId::Fig2, "fig2"}, {FigureId::Fig3, "fig3"},
    {FigureId::Fig4, "fig4"}, {FigureId::Fig5, "fig5"}, {FigureId::Fig6, "fig6"},
    {FigureId::Fig7, "fig7"}, {FigureId::Fig8, "fig8"}, {FigureId::KMax, "kmax"},
    {FigureId::FitLines, "fitlines"}, {FigureId::KernelScan, "kernelscan"},
};

}  // namespace

std::optional<FigureId> parse_figure(std::string_view name) {
  for (const auto& entry : kFigureNames)
    if (entry.name == name) return entry.id;
  return std::nullopt;
}

std::string_view figure_name(FigureId id) {
  for (const auto& entry : kFigureNames)
    if (entry.id == id) return entry.name;
  return "?";
}

namespace {

TableCell nat_cell(const Nat& v) { return {v.get_str(), v.get_str()}; }

TableCell sci_cell(const Nat& v, unsigned decimals, Rounding mode) {
  return {format_scientific(v, decimals, mode), v.get_str()};
}

TableCell ratio_csv(const Ratio& r, std::string display) {
  return {std::move(display), r.get_num().get_str() + "/" + r.get_den().get_str()};
}

TableCell text_cell(std::string s) { return {s, s}; }

TableCell double_cell(double v, const char* fmt = "%.5f") {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return {buf, buf};
}

std::vector<std::size_t> default_or(const std::optional<std::vector<std::size_t>>& ns,
                                    std::vector<std::size_t> fallback) {
  return ns ? *ns : std::move(fallback);
}

std::vector<std::size_t> iota_range(std::size_t from, std::size_t to) {
  std::vector<std::size_t> v(to - from + 1);
  std::iota(v.begin(), v.end(), from);
  return v;
}

// Figures 1 and 3 share their layout; only the class and rendering of the
// ratio column differ.
Table convergence_figure(RelationClass c, std::string title,
                         const std::vector<std::size_t>& ns, Rounding percent_mode) {
  Table t;
  t.title = std::move(title);
  t.header = {"n", std::string(class_name(c)) + "s", "with fixed point", "ratio"};
  for (std::size_t n : ns) {
    Nat total = count_total(c, n, n);
    Nat with = count_with_at_least_one(c, n, n);
    Ratio p = probability_at_least_one(c, n, n);
    t.rows.push_back({nat_cell(n), sci_cell(total, 6, Rounding::HalfUp),
                      sci_cell(with, 6, Rounding::HalfUp),
                      ratio_csv(p, format_percent(p, 3, percent_mode))});
  }
  return t;
}

Table profile_figure(RelationClass c, std::string title,
                     const std::vector<std::size_t>& ns, bool with_total) {
  std::size_t widest = 0;
  for (std::size_t n : ns) widest = std::max(widest, n);
  Table t;
  t.title = std::move(title);
  t.header = {"n"};
  if (with_total) t.header.push_back("total");
  for (std::size_t k = 0; k <= widest; ++k) t.header.push_back("k=" + std::to_string(k));
  for (std::size_t n : ns) {
    std::vector<TableCell> row{nat_cell(n)};
    if (with_total) row.push_back(nat_cell(count_total(c, n, n)));
    for (std::size_t k = 0; k <= widest; ++k)
      row.push_back(k <= n ? nat_cell(count_with_k(c, n, n, k)) : text_cell(""));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table fig6_lower() {
  Table t;
  t.title = "proper involutions";
  t.header = {"n", "proper", "involutions", "ratio"};
  for (std::size_t n = 0; n <= 18; n += 2) {
    Nat proper = involution_count_k(n, 0);
    Nat total = involution_total(n);
    Ratio p = make_ratio(proper, total);
    unsigned decimals = n <= 6 ? 2 : 3;
    t.rows.push_back({nat_cell(n), nat_cell(proper), nat_cell(total),
                      ratio_csv(p, format_percent(p, decimals, Rounding::HalfUp))});
  }
  return t;
}

Table fig7_left() {
  constexpr std::size_t n = 11;
  Table t;
  t.title = "transitive partial functions on an 11-set";
  t.header = {"l"};
  for (std::size_t k = 0; k <= n; ++k) t.header.push_back("k=" + std::to_string(k));
  for (std::size_t l = 0; l <= n; ++l) {
    std::vector<TableCell> row{nat_cell(l)};
    for (std::size_t k = 0; k + l <= n; ++k)
      row.push_back(nat_cell(count_with_kl(RelationClass::TransitivePartialFunction, n, k, l)));
    t.rows.push_back(std::move(row));
  }
  std::vector<TableCell> sums{text_cell("sum")};
  for (std::size_t k = 0; k <= n; ++k)
    sums.push_back(nat_cell(count_with_k(RelationClass::TransitivePartialFunction, n, n, k)));
  t.rows.push_back(std::move(sums));
  return t;
}

Table fig7_right(const std::vector<std::size_t>& ns) {
  Table t;
  t.title = "idempotent functions";
  std::size_t widest = 0;
  for (std::size_t n : ns) widest = std::max(widest, n);
  t.header = {"n", "total"};
  for (std::size_t k = 1; k <= widest; ++k) t.header.push_back("k=" + std::to_string(k));
  for (std::size_t n : ns) {
    std::vector<TableCell> row{nat_cell(n),
                               nat_cell(count_total(RelationClass::IdempotentFunction, n, n))};
    for (std::size_t k = 1; k <= widest; ++k)
      row.push_back(k <= n ? nat_cell(count_with_k(RelationClass::IdempotentFunction, n, n, k))
                           : text_cell(""));
    t.rows.push_back(std::move(row));
  }
  return t;
}

// Ratio columns of the counts table: plain truncated 5-decimal values, short
// exact values minimally, magnitudes below 0.01 in scientific notation when
// the column uses it.
TableCell fig8_ratio(const Ratio& r, bool scientific_below_percent) {
  if (scientific_below_percent && r < Ratio(1, 100))
    return ratio_csv(r, format_scientific(r, 5, Rounding::Truncate));
  return ratio_csv(r, format_fixed(r, 5, Rounding::Truncate, /*trim_exact=*/true));
}

Table fig8_table(const std::vector<std::size_t>& ns) {
  Table t;
  t.title = "functions, transitive/idempotent partial functions, idempotent functions";
  t.header = {"n", "functions", "trans. part. fun.", "idemp. part. fun.", "idemp. fun.",
              "C2/C1", "C3/C2", "C4/C3"};
  for (std::size_t n : ns) {
    Nat functions = count_total(RelationClass::Function, n, n);
    Nat transitive = count_total(RelationClass::TransitivePartialFunction, n, n);
    Nat idem_partial = count_total(RelationClass::IdempotentPartialFunction, n, n);
    Nat idem = count_total(RelationClass::IdempotentFunction, n, n);
    auto count_cell = [&](const Nat& v) {
      return n <= 10 ? nat_cell(v) : sci_cell(v, 5, Rounding::Truncate);
    };
    t.rows.push_back({nat_cell(n), count_cell(functions), count_cell(transitive),
                      count_cell(idem_partial), count_cell(idem),
                      fig8_ratio(make_ratio(transitive, functions), true),
                      fig8_ratio(make_ratio(idem_partial, transitive), false),
                      fig8_ratio(make_ratio(idem, idem_partial), false)});
  }
  return t;
}

Table kmax_table(const std::vector<std::size_t>& ns) {
  Table t;
  t.title = "first k maximizing the fixed-point counts";
  t.header = {"n", "trans. part. fun.", "idemp. part. fun.", "idemp. fun."};
  for (std::size_t n : ns) {
    t.rows.push_back({nat_cell(n),
                      nat_cell(kmax(RelationClass::TransitivePartialFunction, n)),
                      nat_cell(kmax(RelationClass::IdempotentPartialFunction, n)),
                      nat_cell(kmax(RelationClass::IdempotentFunction, n))});
  }
  return t;
}

// The published intervals sample every integer n; the inner intervals are
// half-open and the intercept is reported at the interval start.
struct FitInterval {
  std::size_t lo, hi;
  std::string label;
};

const std::vector<FitInterval>& fit_intervals() {
  static const std::vector<FitInterval> intervals = {
      {1, 100, "1<=n<=100"}, {10, 39, "10<=n<40"}, {40, 69, "40<=n<70"}, {70, 99, "70<=n<100"}};
  return intervals;
}

Table fitlines_table() {
  Table t;
  t.title = "least-squares lines through (n, k_max)";
  t.header = {"class"};
  for (const FitInterval& iv : fit_intervals()) {
    t.header.push_back("a [" + iv.label + "]");
    t.header.push_back("b [" + iv.label + "]");
  }
  for (RelationClass c : {RelationClass::TransitivePartialFunction,
                          RelationClass::IdempotentPartialFunction,
                          RelationClass::IdempotentFunction}) {
    std::vector<TableCell> row{text_cell(std::string(class_name(c)))};
    for (const FitInterval& iv : fit_intervals()) {
      FitLine line = fit_kmax_line(c, iv.lo, iv.hi);
      row.push_back(double_cell(line.a));
      row.push_back(double_cell(line.a * static_cast<double>(iv.lo) + line.b));
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table kernel_scan_table(const std::vector<std::size_t>& ns, unsigned jobs) {
  auto [lo, hi] = std::minmax_element(ns.begin(), ns.end());
  ExtremaScan scan = scan_s(*lo, *hi, jobs);
  auto extremum_of = [&](unsigned long n) -> std::string {
    for (const auto& [m, v] : scan.local_minima)
      if (m == n) return "min";
    for (const auto& [m, v] : scan.local_maxima)
      if (m == n) return "max";
    return "";
  };
  Table t;
  t.title = "kernel bound series S";
  t.header = {"n", "S", "extremum"};
  for (std::size_t n : ns) {
    Ratio display = make_ratio(scan.micro[n - *lo], 1000000);
    t.rows.push_back({nat_cell(n),
                      text_cell(format_fixed(display, 6, Rounding::HalfUp)),
                      text_cell(extremum_of(n))});
  }
  return t;
}

}  // namespace

std::vector<Table> build_figure(FigureId id,
                                const std::optional<std::vector<std::size_t>>& ns,
                                unsigned jobs) {
  switch (id) {
    case FigureId::Fig1:
      return {convergence_figure(RelationClass::Function, "functions with fixed points",
                                 default_or(ns, {1, 5, 10, 25, 50, 100, 150, 200, 250}),
                                 Rounding::HalfUp)};
    case FigureId::Fig2: {
      Table t;
      t.title = "permutations with fixed points";
      t.header = {"n", "permutations", "with fixed point", "ratio"};
      for (std::size_t n : default_or(ns, iota_range(1, 12))) {
        Nat total = count_total(RelationClass::Permutation, n, n);
        Nat with = count_with_at_least_one(RelationClass::Permutation, n, n);
        Ratio p = probability_at_least_one(RelationClass::Permutation, n, n);
        t.rows.push_back({nat_cell(n), nat_cell(total), nat_cell(with),
                          ratio_csv(p, format_percent(p, 5, Rounding::Truncate))});
      }
      return {t};
    }
    case FigureId::Fig3:
      return {convergence_figure(RelationClass::PartialFunction,
                                 "partial functions with fixed points",
                                 default_or(ns, {1, 5, 10, 25, 50, 100, 150, 200}),
                                 Rounding::Truncate)};
    case FigureId::Fig4:
      return {profile_figure(RelationClass::TotalRelation,
                             "total relations by reflexive points",
                             default_or(ns, iota_range(1, 5)), true)};
    case FigureId::Fig5:
      return {profile_figure(RelationClass::Permutation, "permutations by fixed points",
                             default_or(ns, iota_range(1, 10)), false)};
    case FigureId::Fig6:
      return {profile_figure(RelationClass::Involution, "involutions by fixed points",
                             default_or(ns, iota_range(0, 14)), true),
              fig6_lower()};
    case FigureId::Fig7:
      return {fig7_left(), fig7_right(default_or(ns, iota_range(1, 12)))};
    case FigureId::Fig8:
      return {fig8_table(default_or(ns, {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 20, 30, 40, 50}))};
    case FigureId::KMax: {
      std::vector<std::size_t> grid = iota_range(1, 10);
      for (std::size_t n = 20; n <= 100; n += 10) grid.push_back(n);
      return {kmax_table(default_or(ns, std::move(grid)))};
    }
    case FigureId::FitLines:
      return {fitlines_table()};
    case FigureId::KernelScan:
      return {kernel_scan_table(default_or(ns, iota_range(1, 700)), jobs)};
  }
  throw std::invalid_argument("build_figure: unknown figure");
}

namespace {

std::string render_plain(const Table& t) {
  std::vector<std::size_t> widths(t.header.size());
  for (std::size_t i = 0; i < t.header.size(); ++i) widths[i] = t.header[i].size();
  for (const auto& row : t.rows)
    for (std::size_t i = 0; i < row.size(); ++i)
      widths[i] = std::max(widths[i], row[i].display.size());

  std::ostringstream out;
  out << "# " << t.title << "\n";
  auto emit_row = [&](auto get) {
    for (std::size_t i = 0; i < widths.size(); ++i) {
      std::string value = get(i);
      out << std::string(widths[i] - value.size(), ' ') << value;
      out << (i + 1 < widths.size() ? "  " : "\n");
    }
  };
  emit_row([&](std::size_t i) { return t.header[i]; });
  for (const auto& row : t.rows)
    emit_row([&](std::size_t i) { return i < row.size() ? row[i].display : std::string(); });
  return out.str();
}

std::string render_markdown(const Table& t) {
  std::ostringstream out;
  out << "### " << t.title << "\n\n";
  out << "| " ;
  for (std::size_t i = 0; i < t.header.size(); ++i)
    out << t.header[i] << (i + 1 < t.header.size() ? " | " : " |\n");
  out << "|";
  for (std::size_t i = 0; i < t.header.size(); ++i) out << " --- |";
  out << "\n";
  for (const auto& row : t.rows) {
    out << "| ";
    for (std::size_t i = 0; i < t.header.size(); ++i) {
      out << (i < row.size() ? row[i].display : "");
      out << (i + 1 < t.header.size() ? " | " : " |\n");
    }
  }
  return out.str();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string render_csv(const Table& t) {
  std::ostringstream out;
  for (std::size_t i = 0; i < t.header.size(); ++i)
    out << csv_escape(t.header[i]) << (i + 1 < t.header.size() ? "," : "\n");
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < t.header.size(); ++i) {
      out << (i < row.size() ? csv_escape(row[i].csv) : "");
      out << (i + 1 < t.header.size() ? "," : "\n");
    }
  }
  return out.str();
}

}  // namespace

std::string render_tables(std::span<const Table> tables, TableFormat format) {
  std::string out;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (i > 0) out += "\n";
    switch (format) {
      case TableFormat::Plain: out += render_plain(tables[i]); break;
      case TableFormat::Markdown: out += render_markdown(tables[i]); break;
      case TableFormat::Csv: out += render_csv(tables[i]); break;
    }
  }
  return out;
}

std::string emit_table(const TableSpec& spec) {
  std::vector<Table> tables = build_figure(spec.figure, spec.ns, spec.jobs);
  return render_tables(tables, spec.format);
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> verify_pairs(RelationClass c,
                                                              const VerifyBudget& budget) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  switch (c) {
    case RelationClass::ArbitraryRelation:
    case RelationClass::TotalRelation:
      for (std::size_t m = 1; m <= budget.max_mn_bits; ++m)
        for (std::size_t n = m; m * n <= budget.max_mn_bits; ++n) pairs.emplace_back(m, n);
      break;
    case RelationClass::Function:
    case RelationClass::PartialFunction: {
      std::size_t radix_shift = c == RelationClass::PartialFunction ? 1 : 0;
      for (std::size_t m = 1; m <= budget.max_hetero_n; ++m)
        for (std::size_t n = m; n <= budget.max_hetero_n; ++n) {
          long double size = std::pow(static_cast<long double>(n + radix_shift),
                                      static_cast<long double>(m));
          if (size <= static_cast<long double>(budget.max_family)) pairs.emplace_back(m, n);
        }
      break;
    }
    case RelationClass::Permutation:
    case RelationClass::Involution:
      for (std::size_t n = 1; n <= budget.perm_max_n; ++n) pairs.emplace_back(n, n);
      break;
    default:
      for (std::size_t n = 1; n <= budget.idem_max_n; ++n) pairs.emplace_back(n, n);
      break;
  }
  return pairs;
}

}  // namespace

std::string VerifyReport::summary() const {
  std::ostringstream out;
  out << "checked " << entries.size() << " (class, m, n) profiles, " << mismatches
      << " mismatch" << (mismatches == 1 ? "" : "es") << "\n";
  for (const Entry& e : entries)
    if (!e.ok)
      out << "  MISMATCH " << class_name(e.c) << " m=" << e.m << " n=" << e.n << ": "
          << e.detail << "\n";
  return out.str();
}

VerifyReport run_verify(std::span<const RelationClass> classes, const VerifyBudget& budget,
                        unsigned jobs) {
  VerifyReport report;
  for (RelationClass c : classes) {
    for (auto [m, n] : verify_pairs(c, budget)) {
      VerifyReport::Entry entry{c, m, n, true, ""};
      CountProfile oracle = oracle_profile(c, m, n, jobs);
      for (std::size_t k = 0; k <= m && entry.ok; ++k) {
        Nat expected = count_with_k(c, m, n, k);
        if (oracle.by_k[k] != expected) {
          entry.ok = false;
          entry.detail = "k=" + std::to_string(k) + ": oracle " + oracle.by_k[k].get_str() +
                         " vs formula " + expected.get_str();
        }
      }
      if (entry.ok && oracle.total() != count_total(c, m, n)) {
        entry.ok = false;
        entry.detail = "total mismatch";
      }
      if (entry.ok && has_kl_profile(c)) {
        for (std::size_t k = 0; k <= m && entry.ok; ++k)
          for (std::size_t l = 0; k + l <= n && entry.ok; ++l) {
            Nat expected = count_with_kl(c, n, k, l);
            if (oracle.by_kl[k][l] != expected) {
              entry.ok = false;
              entry.detail = "k=" + std::to_string(k) + " l=" + std::to_string(l) + ": oracle " +
                             oracle.by_kl[k][l].get_str() + " vs formula " + expected.get_str();
            }
          }
      }
      if (!entry.ok) ++report.mismatches;
      report.entries.push_back(std::move(entry));
    }
  }
  return report;
}

}  // namespace relcount
