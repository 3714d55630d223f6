#include "relcount/kernel.hpp"

#include <stdexcept>
#include <thread>

namespace relcount {

bool has_kernel(const Relation& r) {
  if (r.source_size() != r.target_size())
    throw std::invalid_argument("has_kernel: homogeneous relation required");
  std::size_t n = r.source_size();
  for (std::uint64_t subset = 0; subset < (1ull << n); ++subset) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      bool inside = (subset >> x) & 1u;
      bool successor_in_subset = (r.row(x) & subset) != 0;
      ok = inside != successor_in_subset;
    }
    if (ok) return true;
  }
  return false;
}

Ratio kernel_probability_exact(unsigned long n) {
  if (n < 1 || n > 4)
    throw std::invalid_argument("kernel_probability_exact: n must be in [1, 4]");
  std::uint64_t with_kernel = 0;
  std::uint64_t total = 1ull << (n * n);
  Relation r(n, n);
  std::uint64_t row_mask = (1ull << n) - 1;
  for (std::uint64_t v = 0; v < total; ++v) {
    for (std::size_t i = 0; i < n; ++i) r.set_row(i, (v >> (i * n)) & row_mask);
    if (has_kernel(r)) ++with_kernel;
  }
  return make_ratio(with_kernel, total);
}

Nat s_series_numerator(unsigned long n, unsigned jobs) {
  // term i: C(n,i) (2^i - 1)^(n-i) 2^(n(n-i)); the power of two is a shift.
  auto term = [n](unsigned long i) {
    if (i == 0) return n == 0 ? Nat(1) : Nat(0);
    Nat t = pow_nat(pow2(i) - 1, n - i);
    t <<= n * (n - i);
    return Nat(binomial(n, i) * t);
  };

  unsigned workers = std::max(1u, jobs);
  if (workers == 1 || n < 8) {
    Nat acc = 0;
    for (unsigned long i = 0; i <= n; ++i) acc += term(i);
    return acc;
  }

  std::vector<Nat> partial(workers, Nat(0));
  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (unsigned long i = w; i <= n; i += workers) partial[w] += term(i);
    });
  }
  for (std::thread& t : threads) t.join();
  Nat acc = 0;
  for (const Nat& p : partial) acc += p;
  return acc;
}

Ratio s_series(unsigned long n, unsigned jobs) {
  return make_ratio(s_series_numerator(n, jobs), pow2(n * n));
}

namespace {

long micro_of_numerator(const Nat& numerator, unsigned long n) {
  if (n == 0) return 1000000;  // S(0) = 1
  Nat num = numerator * 1000000 + pow2(n * n - 1);
  return static_cast<long>(Nat(num >> (n * n)).get_ui());
}

}  // namespace

long s_rounded_micro(unsigned long n, unsigned jobs) {
  return micro_of_numerator(s_series_numerator(n, jobs), n);
}

ExtremaScan scan_s(unsigned long n_from, unsigned long n_to, unsigned jobs) {
  if (n_from < 1 || n_from > n_to) throw std::invalid_argument("scan_s: bad range");

  std::size_t count = n_to - n_from + 1;
  std::vector<Nat> numerators(count);

  // independent values; workers share nothing and the layout is fixed
  unsigned workers = std::max(1u, jobs);
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) numerators[i] = s_series_numerator(n_from + i);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (std::size_t i = w; i < count; i += workers)
          numerators[i] = s_series_numerator(n_from + i);
      });
    }
    for (std::thread& t : threads) t.join();
  }

  ExtremaScan scan;
  scan.values.reserve(count);
  scan.micro.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    unsigned long n = n_from + i;
    scan.values.emplace_back(n, Ratio(numerators[i], pow2(n * n)).get_d());
    scan.micro.push_back(micro_of_numerator(numerators[i], n));
  }

  // S(n) vs S(n+1) compared exactly: N(n) 2^(2n+1) vs N(n+1)
  auto cmp_next = [&](std::size_t i) {
    unsigned long n = n_from + i;
    Nat lhs = numerators[i] << (2 * n + 1);
    return cmp(lhs, numerators[i + 1]);
  };
  for (std::size_t i = 1; i + 1 < count; ++i) {
    int before = cmp_next(i - 1);
    int after = cmp_next(i);
    if (before > 0 && after < 0) scan.local_minima.push_back(scan.values[i]);
    if (before < 0 && after > 0) scan.local_maxima.push_back(scan.values[i]);
  }
  return scan;
}

}  // namespace relcount
