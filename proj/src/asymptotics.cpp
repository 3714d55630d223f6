#include "relcount/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

#include "relcount/counting.hpp"

namespace relcount {

LimitConstant limit_constant(RelationClass c) {
  switch (c) {
    case RelationClass::Function:
    case RelationClass::PartialFunction:
    case RelationClass::Permutation:
      return {"1 - 1/e", 1.0 - std::exp(-1.0)};
    case RelationClass::TotalRelation:
    case RelationClass::ArbitraryRelation:
      return {"1", 1.0};
    default:
      throw std::invalid_argument("limit_constant: no limit recorded for this class");
  }
}

std::vector<ConvergenceRow> convergence_table(RelationClass c,
                                              std::span<const std::size_t> ns) {
  double limit = limit_constant(c).value;
  std::vector<ConvergenceRow> rows;
  rows.reserve(ns.size());
  for (std::size_t n : ns) {
    if (n < 1) throw std::invalid_argument("convergence_table: n must be >= 1");
    Ratio p = probability_at_least_one(c, n, n);
    rows.push_back({n, p, std::fabs(p.get_d() - limit)});
  }
  return rows;
}

std::vector<Nat> lemma_mw1_products(unsigned long n) {
  std::vector<Nat> products;
  products.reserve(n + 1);
  for (unsigned long k = 0; k <= n; ++k)
    products.push_back(pow2(n + k) * pow_nat(k, n - k));
  return products;
}

bool check_lemma_mw1(unsigned long n) {
  if (n < 8) throw std::invalid_argument("check_lemma_mw1: n must be >= 8");
  Nat bound = pow_nat(n, n - 1);
  for (const Nat& product : lemma_mw1_products(n))
    if (product > bound) return false;
  return true;
}

double lambert_w0(double x) {
  if (x < 0) throw std::invalid_argument("lambert_w0: negative argument");
  if (x == 0) return 0.0;
  double w = std::log1p(x);
  for (int iter = 0; iter < 100; ++iter) {
    double ew = std::exp(w);
    double f = w * ew - x;
    if (std::fabs(f) <= 1e-13 * std::max(1.0, x)) break;
    double deriv = ew * (w + 1.0);
    double step = f / (deriv - f * (w + 2.0) / (2.0 * (w + 1.0)));
    // keep the iterate in the domain; halve the step if it overshoots
    while (w - step < 0) step /= 2.0;
    w -= step;
  }
  return w;
}

double h_peak(unsigned long n) {
  if (n < 1) throw std::invalid_argument("h_peak: n must be >= 1");
  double w = lambert_w0(static_cast<double>(n) * std::exp(1.0));
  double via_quotient = static_cast<double>(n) / w;
  double via_exponent = std::exp(w - 1.0);
  if (std::fabs(via_quotient - via_exponent) > 1e-9 * std::fabs(via_quotient))
    throw std::logic_error("h_peak: closed forms disagree");
  return via_quotient;
}

ShapeReport shape_report(std::span<const Nat> values) {
  if (values.empty()) throw std::invalid_argument("shape_report: empty input");
  ShapeReport report;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[report.first_argmax]) report.first_argmax = i;
    if (values[i] == values[i - 1]) report.plateaus.emplace_back(i - 1, i);
  }
  using Direction = ShapeReport::Direction;
  auto direction_of = [&](std::size_t i) {
    int order = cmp(values[i], values[i + 1]);
    return order < 0 ? Direction::Ascending : order > 0 ? Direction::Descending : Direction::Flat;
  };
  std::size_t run_begin = 0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    Direction d = direction_of(i);
    bool last = i + 2 == values.size();
    if (!last && direction_of(i + 1) == d) continue;
    report.runs.push_back({run_begin, i + 1, d});
    run_begin = i + 1;
  }
  return report;
}

std::size_t first_argmax(std::span<const Nat> values) {
  if (values.empty()) throw std::invalid_argument("first_argmax: empty input");
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] > values[best]) best = i;
  return best;
}

std::size_t kmax(RelationClass c, std::size_t n) {
  std::vector<Nat> values = profile_by_k(c, n, n);
  return first_argmax(values);
}

FitLine fit_points(std::span<const std::pair<double, double>> points) {
  if (points.size() < 2) throw std::invalid_argument("fit_points: need at least two points");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (auto [x, y] : points) {
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  double count = static_cast<double>(points.size());
  double a = (count * sxy - sx * sy) / (count * sxx - sx * sx);
  double b = (sy - a * sx) / count;
  return {a, b};
}

FitLine fit_kmax_line(RelationClass c, std::size_t n_from, std::size_t n_to) {
  if (c != RelationClass::TransitivePartialFunction &&
      c != RelationClass::IdempotentPartialFunction &&
      c != RelationClass::IdempotentFunction)
    throw std::invalid_argument("fit_kmax_line: class has no k_max table");
  if (n_from > n_to || n_from < 1) throw std::invalid_argument("fit_kmax_line: empty range");
  std::vector<std::pair<double, double>> points;
  points.reserve(n_to - n_from + 1);
  for (std::size_t n = n_from; n <= n_to; ++n)
    points.emplace_back(static_cast<double>(n), static_cast<double>(kmax(c, n)));
  return fit_points(points);
}

Enclosure ln_enclosure(const Ratio& x, unsigned terms) {
  if (x < 1) throw std::invalid_argument("ln_enclosure: x must be >= 1");

  // atanh(t) for rational t in [0, 1/2): partial sum plus certified tail bound
  // tail <= t^(2J+3) / ((2J+3) (1 - t^2)).
  auto atanh_bounds = [terms](const Ratio& t) {
    Ratio t2 = t * t;
    Ratio power = t;
    Ratio sum = 0;
    for (unsigned j = 0; j <= terms; ++j) {
      sum += power / Ratio(2 * j + 1);
      power *= t2;
    }
    Ratio tail = power / (Ratio(2 * terms + 3) * (Ratio(1) - t2));
    return Enclosure{sum, sum + tail};
  };

  // ln 2 = 2 atanh(1/3)
  Enclosure ln2 = atanh_bounds(Ratio(1, 3));
  ln2.lo *= 2;
  ln2.hi *= 2;

  // reduce x into [1, 2)
  Ratio y = x;
  unsigned long halvings = 0;
  while (y >= 2) {
    y /= 2;
    ++halvings;
  }
  Ratio t = (y - 1) / (y + 1);  // in [0, 1/3)
  Enclosure lny = atanh_bounds(t);
  lny.lo *= 2;
  lny.hi *= 2;

  Enclosure result;
  result.lo = Ratio(static_cast<unsigned long>(halvings)) * ln2.lo + lny.lo;
  result.hi = Ratio(static_cast<unsigned long>(halvings)) * ln2.hi + lny.hi;
  return result;
}

Section5Bounds check_section5_bounds(unsigned long n, bool long_tier) {
  if (n < 1) throw std::invalid_argument("check_section5_bounds: n must be >= 1");
  Section5Bounds result;

  Nat a = count_total(RelationClass::IdempotentPartialFunction, n, n);
  Nat b = count_total(RelationClass::IdempotentFunction, n, n);
  Nat c = count_total(RelationClass::TransitivePartialFunction, n, n);

  result.a_le_one_plus_n2_b = a <= 1 + Nat(n) * Nat(n) * b;

  if (n >= 256) result.n3_b_le_c = Nat(n) * Nat(n) * Nat(n) * b <= c;

  if (long_tier && n >= 1453) {
    Enclosure ln_np1 = ln_enclosure(Ratio(n + 1));
    result.bn_ln_le_an = Ratio(b) * ln_np1.lo <= Ratio(a);
  }

  bool tail_ok = true;
  for (unsigned long k = 0; k + 4 <= n; ++k) {
    if ((n - k) % 2 != 0) continue;
    Nat lhs = pow2((n - k) / 2) * involution_count_k(n, k);
    Nat rhs = 4 * binomial(n, k) * subfactorial(n - k);
    if (lhs > rhs) {
      tail_ok = false;
      break;
    }
  }
  result.involution_tail = tail_ok;
  return result;
}

}  // namespace relcount
