#pragma once

#include <cstddef>
#include <vector>

#include "relcount/arith.hpp"
#include "relcount/relation.hpp"

namespace relcount {

// True iff some K subseteq X satisfies: x not in K iff there is y in K with
// (x, y) in R.  Exhaustive over all 2^n subsets; r must be homogeneous.
bool has_kernel(const Relation& r);

// Exact fraction of relations on an n-set that have a kernel; enumerates all
// 2^(n^2) relations, so n <= 4.
Ratio kernel_probability_exact(unsigned long n);

// Numerator of S(n) over the denominator 2^(n^2), with
// S(n) = sum_i C(n,i) (2^i - 1)^(n-i) / 2^(n i).
Nat s_series_numerator(unsigned long n, unsigned jobs = 1);

// Exact value of the kernel bound series S(n).
Ratio s_series(unsigned long n, unsigned jobs = 1);

// S(n) rounded half-up to six decimals, computed exactly; returned as the
// integer round(S(n) * 10^6).
long s_rounded_micro(unsigned long n, unsigned jobs = 1);

struct ExtremaScan {
  std::vector<std::pair<unsigned long, double>> values;
  std::vector<long> micro;  // round(S(n) * 10^6), aligned with values
  std::vector<std::pair<unsigned long, double>> local_minima;  // strict, interior
  std::vector<std::pair<unsigned long, double>> local_maxima;
};

// Evaluates S on [n_from, n_to] exactly and reports strict interior extrema.
ExtremaScan scan_s(unsigned long n_from, unsigned long n_to, unsigned jobs = 1);

}  // namespace relcount
