#pragma once

// Test-side oracles, deliberately independent of the library paths they
// check: binomials come from the Pascal recurrence (the library uses the
// multiplicative formula), exact sums build every term from factorials (the
// library increments an exact coefficient ratio), and series values for the
// polylog come from plain truncated summation.

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <vector>

#include "lehmer/polynomial.hpp"

namespace oracle {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;
using lehmer::cdouble;

inline BigInt pascal_binomial(unsigned a, unsigned b) {
  static std::vector<std::vector<BigInt>> rows{{1}};
  while (rows.size() <= a) {
    const auto& prev = rows.back();
    std::vector<BigInt> row(rows.size() + 1, 1);
    for (std::size_t i = 1; i + 1 <= rows.size(); ++i) row[i] = prev[i - 1] + prev[i];
    rows.push_back(std::move(row));
  }
  return b <= a ? rows[a][b] : BigInt(0);
}

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

/// Exact sum of n^k z^n / ((s n + 1) C(s n, n)) for n = start..upper, every
/// term assembled from scratch.
inline BigRational exact_series_sum(unsigned s, unsigned k, const BigRational& z, int start,
                                    int upper) {
  BigRational sum = 0;
  BigRational z_power = 1;
  for (int i = 0; i < start; ++i) z_power *= z;
  for (int n = start; n <= upper; ++n, z_power *= z) {
    BigInt weight = 1;  // 0^0 = 1
    if (k > 0) {
      weight = n == 0 ? BigInt(0) : BigInt(1);
      for (unsigned i = 0; i < k && n > 0; ++i) weight *= BigInt(n);
    }
    const BigInt denom = BigInt(s * static_cast<unsigned>(n) + 1) *
                         pascal_binomial(s * static_cast<unsigned>(n), static_cast<unsigned>(n));
    sum += BigRational(weight) * z_power / BigRational(denom);
  }
  return sum;
}

inline double as_double(const BigRational& r) { return r.convert_to<double>(); }

/// Truncated defining series of the order -k polylogarithm. Summed in long
/// double: near the negative real axis the series cancels from terms of
/// magnitude ~1e5 down to O(1), so a double-precision reference would carry
/// more noise than the closed form under test.
inline cdouble polylog_series(int k, cdouble x, int terms = 200) {
  std::complex<long double> sum = 0.0L;
  std::complex<long double> x_power = 1.0L;
  const std::complex<long double> xl(x.real(), x.imag());
  for (int n = 1; n <= terms; ++n) {
    x_power *= xl;
    long double weight = 1.0L;
    for (int i = 0; i < k; ++i) weight *= n;
    sum += weight * x_power;
  }
  return cdouble(static_cast<double>(sum.real()), static_cast<double>(sum.imag()));
}

/// Same truncated series in exact rational arithmetic (real rational x).
inline BigRational polylog_series_exact(int k, const BigRational& x, int terms = 200) {
  BigRational sum = 0;
  BigRational x_power = 1;
  for (int n = 1; n <= terms; ++n) {
    x_power *= x;
    BigInt weight = 1;
    for (int i = 0; i < k; ++i) weight *= n;
    sum += BigRational(weight) * x_power;
  }
  return sum;
}

/// Nearest-match pairing distance between two root multisets; large when the
/// sets differ. Order-insensitive by construction.
inline double root_set_distance(std::vector<cdouble> a, std::vector<cdouble> b) {
  if (a.size() != b.size()) return 1e300;
  double worst = 0.0;
  for (const cdouble& want : a) {
    std::size_t best = 0;
    double best_dist = 1e300;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const double d = std::abs(b[i] - want);
      if (d < best_dist) {
        best_dist = d;
        best = i;
      }
    }
    worst = std::max(worst, best_dist);
    b.erase(b.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return worst;
}

}  // namespace oracle
