#pragma once

#include <cmath>
#include <complex>
#include <string>

#include "lehmer/errors.hpp"
#include "lehmer/eulerian.hpp"
#include "lehmer/polynomial.hpp"

namespace lehmer {

namespace detail {
inline constexpr double kPolylogPoleTol = 1e-10;
}

/// Li(-k, x) for k >= 0 as the Eulerian rational function
///   k = 0:  x / (1 - x)
///   k >= 1: (sum_{i=0}^{k-1} A(k, i) x^(k-i)) / (1 - x)^(k+1).
/// This is the closed form of sum_{n>=1} n^k x^n, i.e. the polylogarithm of
/// order -k; the argument must stay away from the pole at x = 1.
inline cdouble polylog_neg(int k, cdouble x) {
  if (k < 0) throw invalid_argument("polylog_neg: k must be >= 0 (order is -k)");
  const cdouble one_minus_x = 1.0 - x;
  if (std::abs(one_minus_x) < detail::kPolylogPoleTol)
    throw domain_error("polylog_neg: argument within " +
                       std::to_string(detail::kPolylogPoleTol) + " of the pole at x = 1");
  if (k == 0) return x / one_minus_x;

  const auto& row = eulerian_row(k);
  cdouble numerator = 0.0;
  for (int i = 0; i < k; ++i)
    numerator = numerator * x + row[static_cast<std::size_t>(i)].convert_to<double>();
  numerator *= x;
  return numerator / cpow_int(one_minus_x, k + 1);
}

/// Real-argument fast path (the quadrature integrands are real).
inline double polylog_neg(int k, double x) {
  if (k < 0) throw invalid_argument("polylog_neg: k must be >= 0 (order is -k)");
  const double one_minus_x = 1.0 - x;
  if (std::fabs(one_minus_x) < detail::kPolylogPoleTol)
    throw domain_error("polylog_neg: argument within " +
                       std::to_string(detail::kPolylogPoleTol) + " of the pole at x = 1");
  if (k == 0) return x / one_minus_x;

  const auto& row = eulerian_row(k);
  double numerator = 0.0;
  for (int i = 0; i < k; ++i)
    numerator = numerator * x + row[static_cast<std::size_t>(i)].convert_to<double>();
  numerator *= x;
  double denom = 1.0;
  for (int i = 0; i <= k; ++i) denom *= one_minus_x;
  return numerator / denom;
}

}  // namespace lehmer
