#include <doctest.h>

#include <cmath>

#include "relcount/asymptotics.hpp"
#include "relcount/counting.hpp"
#include "relcount/tables.hpp"

using namespace relcount;

namespace {

Ratio ratio_pow(const Ratio& base, unsigned long exp) {
  Ratio result = 1;
  for (unsigned long i = 0; i < exp; ++i) result *= base;
  return result;
}

}  // namespace

TEST_CASE("limit constants") {
  CHECK(limit_constant(RelationClass::Function).value ==
        doctest::Approx(0.6321205).epsilon(1e-6));
  CHECK(limit_constant(RelationClass::ArbitraryRelation).value == 1.0);
  CHECK(limit_constant(RelationClass::TotalRelation).value == 1.0);
  CHECK(limit_constant(RelationClass::Permutation).description == "1 - 1/e");
  CHECK_THROWS_AS(limit_constant(RelationClass::Involution), std::invalid_argument);
}

TEST_CASE("convergence tables reproduce the published ratios") {
  std::vector<std::size_t> ns{100};
  auto rows = convergence_table(RelationClass::Function, ns);
  CHECK(format_percent(rows[0].probability, 3, Rounding::HalfUp) == "63.397 %");

  ns = {7};
  rows = convergence_table(RelationClass::Permutation, ns);
  CHECK(format_percent(rows[0].probability, 5, Rounding::Truncate) == "63.21428 %");
  CHECK(rows[0].delta == doctest::Approx(0.0).epsilon(1e-4));

  ns = {50};
  rows = convergence_table(RelationClass::PartialFunction, ns);
  CHECK(format_percent(rows[0].probability, 3, Rounding::Truncate) == "62.847 %");
}

TEST_CASE("lemma products for n = 8") {
  const long expected[] = {0,      512,     65536,  497664, 1048576,
                           1024000, 589824, 229376, 65536};
  auto products = lemma_mw1_products(8);
  REQUIRE(products.size() == 9);
  for (std::size_t k = 0; k < 9; ++k) CHECK(products[k] == expected[k]);
  CHECK(check_lemma_mw1(8));
  CHECK(check_lemma_mw1(9));
  CHECK(check_lemma_mw1(64));
  CHECK_THROWS_AS(check_lemma_mw1(7), std::invalid_argument);
}

TEST_CASE("lambert w") {
  CHECK(lambert_w0(0.0) == 0.0);
  double e = std::exp(1.0);
  CHECK(lambert_w0(e) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(lambert_w0(2.0 * e * e) == doctest::Approx(2.0).epsilon(1e-12));
  for (double x : {0.1, 1.0, 17.5, 1e3, 1e8}) {
    double w = lambert_w0(x);
    CHECK(std::fabs(w * std::exp(w) - x) <= 1e-12 * std::max(1.0, x));
  }
  CHECK_THROWS_AS(lambert_w0(-1.0), std::invalid_argument);
}

TEST_CASE("peak of k^(n-k)") {
  CHECK(h_peak(1) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(h_peak(256) >= 2 * std::floor(3 * std::log2(256.0)) + 1);  // = 49
  CHECK(h_peak(228) >= 2 * std::floor(3 * std::log2(228.0)) + 1);
}

TEST_CASE("integer increase of k^(n-k) below the peak") {
  for (unsigned long n : {256ul, 300ul}) {
    unsigned long top = 2 * static_cast<unsigned long>(3 * std::log2(double(n))) + 1;
    for (unsigned long k = 1; k <= top; ++k)
      CHECK(pow_nat(k, n - k) <= pow_nat(k + 1, n - k - 1));
  }
}

TEST_CASE("shape reports") {
  auto tu30 = profile_by_k(RelationClass::TransitivePartialFunction, 30, 30);
  CHECK(shape_report(tu30).first_argmax == 6);
  auto i10 = profile_by_k(RelationClass::IdempotentFunction, 10, 10);
  CHECK(shape_report(i10).first_argmax == 4);

  std::vector<Nat> single{Nat(1)};
  CHECK(shape_report(single).first_argmax == 0);

  std::vector<Nat> bump{Nat(1), Nat(2), Nat(2), Nat(1)};
  ShapeReport report = shape_report(bump);
  CHECK(report.first_argmax == 1);
  REQUIRE(report.plateaus.size() == 1);
  CHECK(report.plateaus[0] == std::pair<std::size_t, std::size_t>{1, 2});
  REQUIRE(report.runs.size() == 3);
  CHECK(report.runs[0].direction == ShapeReport::Direction::Ascending);
  CHECK(report.runs[1].direction == ShapeReport::Direction::Flat);
  CHECK(report.runs[2].direction == ShapeReport::Direction::Descending);
  CHECK_THROWS_AS(shape_report({}), std::invalid_argument);
}

TEST_CASE("least squares") {
  std::vector<std::pair<double, double>> two{{1, 0}, {2, 1}};
  FitLine line = fit_points(two);
  CHECK(line.a == doctest::Approx(1.0));
  CHECK(line.b == doctest::Approx(-1.0));
}

TEST_CASE("k_max fits against the published coefficients") {
  FitLine tu = fit_kmax_line(RelationClass::TransitivePartialFunction, 1, 100);
  CHECK(std::fabs(tu.a - 0.15516) <= 1e-4);
  CHECK(std::fabs(tu.a * 1 + tu.b - 1.32970) <= 1e-4);

  FitLine idem = fit_kmax_line(RelationClass::IdempotentFunction, 70, 100);
  CHECK(std::fabs(idem.a - 0.25095) <= 0.01);
  CHECK(std::fabs(idem.a * 70 + idem.b - 21.36129) <= 0.01);

  CHECK_THROWS_AS(fit_kmax_line(RelationClass::Function, 1, 10), std::invalid_argument);
  CHECK_THROWS_AS(fit_kmax_line(RelationClass::IdempotentFunction, 5, 4),
                  std::invalid_argument);
}

TEST_CASE("first maximizing k for the published columns") {
  CHECK(kmax(RelationClass::TransitivePartialFunction, 30) == 6);
  CHECK(kmax(RelationClass::TransitivePartialFunction, 100) == 16);
  CHECK(kmax(RelationClass::IdempotentPartialFunction, 50) == 16);
  CHECK(kmax(RelationClass::IdempotentFunction, 50) == 16);
}

TEST_CASE("involution k_max stays near sqrt(n+2) - 2") {
  for (std::size_t n = 4; n <= 60; ++n) {
    double threshold = std::sqrt(static_cast<double>(n) + 2) - 2;
    double k = static_cast<double>(kmax(RelationClass::Involution, n));
    CHECK(std::fabs(k - threshold) <= 2.0);
  }
}

TEST_CASE("ln enclosures") {
  Enclosure one = ln_enclosure(Ratio(1));
  CHECK(one.lo == 0);
  CHECK(one.hi >= 0);
  for (unsigned long x : {2ul, 10ul, 1454ul}) {
    Enclosure e = ln_enclosure(Ratio(x));
    CHECK(e.lo <= e.hi);
    // the enclosure is far tighter than double precision, so compare with a
    // slack the size of double rounding error
    double expected = std::log(static_cast<double>(x));
    CHECK(e.lo.get_d() <= expected + 1e-12);
    CHECK(e.hi.get_d() >= expected - 1e-12);
    CHECK(Ratio(e.hi - e.lo).get_d() <= 1e-30);
  }
  CHECK_THROWS_AS(ln_enclosure(make_ratio(1, 2)), std::invalid_argument);
}

TEST_CASE("tail bounds") {
  Section5Bounds b10 = check_section5_bounds(10);
  CHECK(b10.a_le_one_plus_n2_b);
  CHECK_FALSE(b10.n3_b_le_c.has_value());
  CHECK_FALSE(b10.bn_ln_le_an.has_value());
  CHECK(b10.involution_tail);

  Section5Bounds b256 = check_section5_bounds(256);
  CHECK(b256.a_le_one_plus_n2_b);
  REQUIRE(b256.n3_b_le_c.has_value());
  CHECK(*b256.n3_b_le_c);

  CHECK(check_section5_bounds(6).involution_tail);
}

TEST_CASE("difference of the function and partial-function probabilities") {
  for (unsigned long n = 1; n <= 60; ++n) {
    Ratio q = make_ratio(n, n + 1);
    Ratio lhs = ratio_pow(q, n) - ratio_pow(q, n + 1);
    Ratio rhs = ratio_pow(q, n) * make_ratio(1, n + 1);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("convergence sides certified through the e-enclosure") {
  Enclosure e = e_enclosure(30);
  // functions approach 1 - 1/e from above: e < (n/(n-1))^n
  for (unsigned long n = 2; n <= 250; ++n)
    CHECK(e.hi <= ratio_pow(make_ratio(n, n - 1), n));
  // partial functions approach it from below: ((n+1)/n)^n < e
  for (unsigned long n = 1; n <= 250; ++n)
    CHECK(ratio_pow(make_ratio(n + 1, n), n) <= e.lo);
  // permutations alternate around it with the parity of n
  for (unsigned long n = 2; n <= 18; ++n) {
    Ratio partial_sum = make_ratio(subfactorial(n), factorial(n));  // sum (-1)^k/k!
    if (n % 2 == 1)
      CHECK(partial_sum * e.hi <= 1);  // probability above the limit
    else
      CHECK(partial_sum * e.lo >= 1);  // probability below the limit
  }
}
