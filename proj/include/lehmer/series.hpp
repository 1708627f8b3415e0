#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <complex>
#include <string>

#include "lehmer/errors.hpp"
#include "lehmer/polynomial.hpp"

namespace lehmer {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// One instance of the series sum_n n^k z^n / ((s n + 1) C(s n, n)).
/// start = 1 reproduces A_s(z) for k = 0; start = 0 includes the n = 0 term
/// (which is 1 for k = 0 under the 0^0 = 1 convention and 0 for k >= 1).
struct SeriesSpec {
  int s = 2;
  int k = 0;
  cdouble z = 0.0;
  int start = 1;
};

struct SumResult {
  cdouble value = 0.0;
  double truncation_bound = 0.0;  // geometric majorant of the discarded tail
  int terms_used = 0;
};

/// Exact C(a, b) by the multiplicative formula.
inline BigInt binomial(long long a, long long b) {
  if (a < 0 || b < 0) throw invalid_argument("binomial: arguments must be >= 0");
  if (b > a) throw invalid_argument("binomial: b > a");
  const long long small = std::min(b, a - b);
  BigInt result = 1;
  for (long long i = 1; i <= small; ++i) {
    result *= BigInt(a - small + i);
    result /= BigInt(i);  // exact at every step
  }
  return result;
}

inline BigInt factorial(long long n) {
  BigInt r = 1;
  for (long long i = 2; i <= n; ++i) r *= BigInt(i);
  return r;
}

/// The Beta-identity form of the series coefficient:
/// m! ((s-1)m)! / (sm+1)!  ==  1 / ((sm+1) C(sm, m)).
/// Both sides are computed and compared; this makes the Gamma-function step
/// of the integral expansion executable rather than assumed.
inline BigRational term_via_beta(int s, int m) {
  if (s < 1) throw invalid_argument("term_via_beta: s must be >= 1");
  if (m < 0) throw invalid_argument("term_via_beta: m must be >= 0");
  const long long sm = static_cast<long long>(s) * m;
  const BigRational beta_form(factorial(m) * factorial(sm - m), factorial(sm + 1));
  const BigRational binomial_form(BigInt(1), BigInt(sm + 1) * binomial(sm, m));
  if (beta_form != binomial_form)
    throw error("term_via_beta: Beta identity failed for s = " + std::to_string(s) +
                ", m = " + std::to_string(m));
  return beta_form;
}

/// Radius of convergence s^s / (s-1)^(s-1) (growth rate of C(sn, n)),
/// computed from exact integer powers so small s come out exact (4, 6.75, ...).
inline double radius(int s) {
  if (s < 1) throw invalid_argument("radius: s must be >= 1");
  if (s == 1) return 1.0;
  BigInt num = 1;
  BigInt den = 1;
  for (int i = 0; i < s; ++i) num *= BigInt(s);
  for (int i = 0; i < s - 1; ++i) den *= BigInt(s - 1);
  return BigRational(num, den).convert_to<double>();
}

namespace detail {

// Coefficient ratio c(n+1)/c(n) for c(n) = 1/((sn+1) C(sn,n)), as an exact
// rational in small integers:
//   (sn+1)/(sn+s+1) * (n+1) prod_{j=1}^{s-1} ((s-1)n + j) / prod_{j=1}^{s} (sn + j)
inline BigRational coefficient_ratio(int s, long long n) {
  BigInt num = BigInt(s * n + 1) * BigInt(n + 1);
  for (int j = 1; j <= s - 1; ++j) num *= BigInt(static_cast<long long>(s - 1) * n + j);
  BigInt den = BigInt(s * n + s + 1);
  for (int j = 1; j <= s; ++j) den *= BigInt(s * n + j);
  return BigRational(num, den);
}

}  // namespace detail

/// Direct floating-point summation with a geometric tail majorant.
///
/// Terms are built by a ratio recurrence whose rational part is computed
/// exactly and converted per term, so no factorial is ever formed in double
/// precision. Summation stops once the empirical term ratio has stabilized
/// below r* = clamp(|z|/radius + 0.05, 0.9, 0.995) and the majorant
/// |t_n| r* / (1 - r*) drops under tol.
inline SumResult sum_direct(const SeriesSpec& spec, double tol = 1e-12, int max_terms = 20000) {
  if (spec.s < 1) throw invalid_argument("sum_direct: s must be >= 1");
  if (spec.k < 0) throw invalid_argument("sum_direct: k must be >= 0");
  if (spec.start != 0 && spec.start != 1)
    throw invalid_argument("sum_direct: start must be 0 or 1");

  const double r = radius(spec.s);
  const double zmag = std::abs(spec.z);
  if (zmag >= r)
    throw domain_error("sum_direct: series diverges, |z| = " + std::to_string(zmag) +
                       " is not below the convergence radius " + std::to_string(r) +
                       " for s = " + std::to_string(spec.s));

  SumResult out;
  if (spec.start == 0 && spec.k == 0) {
    out.value += 1.0;  // n = 0 term, 0^0 = 1
    ++out.terms_used;
  }
  if (zmag == 0.0) return out;

  const double r_star = std::clamp(zmag / r + 0.05, 0.9, 0.995);

  // t_1 = z / ((s+1) s); subsequent terms via exact coefficient ratios.
  BigRational coeff_ratio;  // c(n+1)/c(n), refreshed each step
  cdouble term = spec.z * BigRational(BigInt(1), BigInt(spec.s + 1) * BigInt(spec.s))
                              .convert_to<double>();
  double prev_mag = std::abs(term);
  out.value += term;
  ++out.terms_used;

  int stable_streak = 0;
  for (long long n = 1; out.terms_used < max_terms; ++n) {
    coeff_ratio = detail::coefficient_ratio(spec.s, n);
    double weight_ratio = 1.0;
    if (spec.k > 0)
      weight_ratio = std::pow(static_cast<double>(n + 1) / static_cast<double>(n), spec.k);
    term *= spec.z * (coeff_ratio.convert_to<double>() * weight_ratio);
    out.value += term;
    ++out.terms_used;

    const double mag = std::abs(term);
    const double ratio = prev_mag > 0.0 ? mag / prev_mag : 0.0;
    prev_mag = mag;
    stable_streak = ratio < r_star ? stable_streak + 1 : 0;
    if (stable_streak >= 3) {
      const double bound = mag * r_star / (1.0 - r_star);
      if (bound < tol) {
        out.truncation_bound = bound;
        return out;
      }
    }
  }
  throw convergence_error("sum_direct: tail bound did not reach " + std::to_string(tol) +
                          " within " + std::to_string(max_terms) + " terms");
}

/// Exact partial sum over n = start .. upper (inclusive upper index) in
/// rational arithmetic; the oracle counterpart of sum_direct.
inline BigRational sum_exact(int s, int k, const BigRational& z, int start, int upper,
                             int cap = 4000) {
  if (s < 1) throw invalid_argument("sum_exact: s must be >= 1");
  if (k < 0) throw invalid_argument("sum_exact: k must be >= 0");
  if (start != 0 && start != 1) throw invalid_argument("sum_exact: start must be 0 or 1");
  if (upper > cap)
    throw capacity_error("sum_exact: upper index " + std::to_string(upper) +
                         " exceeds cap " + std::to_string(cap));

  BigRational sum = 0;
  BigRational coeff = 1;  // c(0)
  BigRational z_power = 1;
  for (long long n = 0; n <= upper; ++n) {
    if (n >= start) {
      BigInt weight = 1;
      if (k > 0) {
        weight = 0;
        if (n > 0) {
          weight = 1;
          for (int i = 0; i < k; ++i) weight *= BigInt(n);
        }
      }
      sum += BigRational(weight) * z_power * coeff;
    }
    coeff *= detail::coefficient_ratio(s, n);
    z_power *= z;
  }
  return sum;
}

}  // namespace lehmer
