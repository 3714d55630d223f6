#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "relcount/arith.hpp"
#include "relcount/relation.hpp"

namespace relcount {

struct LimitConstant {
  std::string description;  // "1 - 1/e" or "1"
  double value;
};

// Limiting probability of having a fixed/reflexive point for the five
// heterogeneous/permutation classes.
LimitConstant limit_constant(RelationClass c);

struct ConvergenceRow {
  std::size_t n;
  Ratio probability;
  double delta;  // |probability - limit|
};

std::vector<ConvergenceRow> convergence_table(RelationClass c,
                                              std::span<const std::size_t> ns);

// The products 2^n * k^(n-k) * 2^k for k = 0..n.
std::vector<Nat> lemma_mw1_products(unsigned long n);

// Exact check that 2^n * k^(n-k) * 2^k <= n^(n-1) for every k <= n; requires
// n >= 8.
bool check_lemma_mw1(unsigned long n);

// Principal branch of the Lambert W function on x >= 0, via damped Halley
// iteration from ln(1 + x); |w e^w - x| <= 1e-12 * max(1, x).
double lambert_w0(double x);

// Location k_n = n / W(n e) of the maximum of k -> k^(n-k); the equivalent
// form e^(W(n e) - 1) is evaluated as a cross-check.
double h_peak(unsigned long n);

// Run/argmax structure of a list of exact values.
struct ShapeReport {
  enum class Direction { Ascending, Descending, Flat };
  struct Run {
    std::size_t begin;  // first index of the run
    std::size_t end;    // last index of the run
    Direction direction;
  };
  std::size_t first_argmax = 0;  // least index attaining the maximum
  std::vector<std::pair<std::size_t, std::size_t>> plateaus;  // adjacent equal pairs
  std::vector<Run> runs;
};

ShapeReport shape_report(std::span<const Nat> values);

std::size_t first_argmax(std::span<const Nat> values);

// Least index k maximizing count_with_k(c, n, n, k).
std::size_t kmax(RelationClass c, std::size_t n);

// y = a x + b minimizing squared residuals.
struct FitLine {
  double a;
  double b;
};

FitLine fit_points(std::span<const std::pair<double, double>> points);

// Least-squares line through (n, kmax(c, n)) for n in [n_from, n_to]; c must
// be one of the transitive/idempotent classes.
FitLine fit_kmax_line(RelationClass c, std::size_t n_from, std::size_t n_to);

// Certified rational bounds lo <= ln(x) <= hi for rational x >= 1.
Enclosure ln_enclosure(const Ratio& x, unsigned terms = 40);

// Exact inequality checks used by the tail estimates for the transitive/
// idempotent counts and the involution limit.  With a_n, b_n, c_n the totals
// of idempotent partial functions, idempotent functions and transitive
// partial functions on an n-set:
//   a_le_one_plus_n2_b   a_n <= 1 + n^2 b_n                       (all n)
//   n3_b_le_c            n^3 b_n <= c_n                           (n >= 256)
//   bn_ln_le_an          b_n * L <= a_n, L a certified lower
//                        rational bound of ln(n + 1)              (n >= 1453, long tier)
//   involution_tail      2^((n-k)/2) J_n(k) <= 4 C(n,k) !(n-k)
//                        for every k with n - k even and >= 4
struct Section5Bounds {
  bool a_le_one_plus_n2_b = false;
  std::optional<bool> n3_b_le_c;
  std::optional<bool> bn_ln_le_an;
  bool involution_tail = false;
};

Section5Bounds check_section5_bounds(unsigned long n, bool long_tier = false);

}  // namespace relcount
