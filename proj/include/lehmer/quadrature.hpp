#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "lehmer/errors.hpp"
#include "lehmer/polylog.hpp"
#include "lehmer/series.hpp"

namespace lehmer {

struct QuadratureResult {
  cdouble value = 0.0;  // imaginary part stays 0 for real integrands
  double error_estimate = 0.0;
  int subdivisions = 0;
  bool converged = false;

  double real() const { return value.real(); }
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule (positive abscissae;
// Gauss points are the odd-indexed entries).
inline constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};

inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <class R>
struct Panel {
  double a, b;
  R value;
  double error;
};

// One Gauss-Kronrod 15(7) application on [a, b]; QUADPACK-style error
// estimate scaled by the deviation integral resasc.
template <class F, class R = std::invoke_result_t<F&, double>>
Panel<R> gauss_kronrod_15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);

  const R fc = f(center);
  R result_gauss = kGaussWeights[3] * fc;
  R result_kronrod = kKronrodWeights[7] * fc;
  double resabs = kKronrodWeights[7] * std::abs(fc);

  R values_low[7], values_high[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kKronrodNodes[j];
    values_low[j] = f(center - dx);
    values_high[j] = f(center + dx);
    const R pair_sum = values_low[j] + values_high[j];
    result_kronrod += kKronrodWeights[j] * pair_sum;
    resabs += kKronrodWeights[j] * (std::abs(values_low[j]) + std::abs(values_high[j]));
    if (j % 2 == 1) result_gauss += kGaussWeights[j / 2] * pair_sum;
  }

  const R mean = result_kronrod * 0.5;
  double resasc = kKronrodWeights[7] * std::abs(fc - mean);
  for (int j = 0; j < 7; ++j)
    resasc += kKronrodWeights[j] * (std::abs(values_low[j] - mean) + std::abs(values_high[j] - mean));
  resasc *= std::fabs(half);
  resabs *= std::fabs(half);

  double err = std::abs(result_kronrod - result_gauss) * std::fabs(half);
  if (resasc != 0.0 && err != 0.0)
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  const double round_floor = 50.0 * std::numeric_limits<double>::epsilon() * resabs;
  err = std::max(err, round_floor);

  return Panel<R>{a, b, result_kronrod * half, err};
}

}  // namespace detail

/// Adaptive integration of f over [a, b]: Gauss-Kronrod 15(7) with
/// worst-panel bisection until the summed error estimate is below tol or the
/// panel cap is hit (in which case the best value is still returned with
/// converged = false). f may return double or complex<double>.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double tol = 1e-12,
                           int max_panels = 2000) {
  using R = std::invoke_result_t<F&, double>;
  if (!(a < b)) throw invalid_argument("integrate: requires a < b");
  if (!(tol > 0.0)) throw invalid_argument("integrate: tol must be positive");

  std::vector<detail::Panel<R>> panels;
  panels.push_back(detail::gauss_kronrod_15(f, a, b));

  auto total_error = [&panels] {
    double e = 0.0;
    for (const auto& p : panels) e += p.error;
    return e;
  };

  while (total_error() > tol && static_cast<int>(panels.size()) < max_panels) {
    std::size_t worst = 0;
    for (std::size_t i = 1; i < panels.size(); ++i)
      if (panels[i].error > panels[worst].error) worst = i;
    const auto split = panels[worst];
    const double mid = 0.5 * (split.a + split.b);
    if (!(split.a < mid && mid < split.b)) break;  // interval exhausted in double
    panels[worst] = detail::gauss_kronrod_15(f, split.a, mid);
    panels.push_back(detail::gauss_kronrod_15(f, mid, split.b));
  }

  QuadratureResult out;
  R total{};
  for (const auto& p : panels) total += p.value;
  out.value = total;
  out.error_estimate = total_error();
  out.subdivisions = static_cast<int>(panels.size());
  out.converged = out.error_estimate <= tol;
  return out;
}

namespace detail {

inline double envelope(int s, double t) {
  // (1 - t) t^(s-1), the factor multiplying z inside both integrands
  double p = 1.0;
  for (int i = 0; i < s - 1; ++i) p *= t;
  return (1.0 - t) * p;
}

// The integrands have poles where z * (1-t) t^(s-1) = 1. The envelope spans
// [0, 1/radius(s)] on t in [0, 1] (peak at t = (s-1)/s), so real z >= radius
// puts a pole on the path; complex z is screened by sampling |denominator|.
inline void require_pole_free(int s, cdouble z, const char* who) {
  const double r = radius(s);
  if (z.imag() == 0.0 && z.real() > 0.0 && z.real() >= r * (1.0 - 1e-12)) {
    const double t_star = s == 1 ? 0.0 : static_cast<double>(s - 1) / s;
    throw domain_error(std::string(who) + ": integrand pole on [0,1] near t = " +
                       std::to_string(t_star) + "; need z < radius " + std::to_string(r) +
                       " for s = " + std::to_string(s));
  }
  double min_denom = std::numeric_limits<double>::infinity();
  double argmin_t = 0.0;
  constexpr int kSamples = 256;
  for (int i = 0; i <= kSamples; ++i) {
    const double t = static_cast<double>(i) / kSamples;
    const double d = std::abs(1.0 - z * envelope(s, t));
    if (d < min_denom) {
      min_denom = d;
      argmin_t = t;
    }
  }
  if (min_denom < 1e-9)
    throw domain_error(std::string(who) + ": integrand nearly singular on [0,1] at t = " +
                       std::to_string(argmin_t) + " (|denominator| = " +
                       std::to_string(min_denom) + ")");
}

}  // namespace detail

/// The base integral int_0^1 dt / (1 - z (1-t) t^(s-1)).
/// Expanding the geometric series term by term under the Beta identity gives
/// sum_{m>=0} z^m / ((sm+1) C(sm,m)), i.e. this equals 1 + A_s(z): it carries
/// the m = 0 term that the series definition (m >= 1) does not. Callers that
/// want A_s(z) itself subtract 1.
inline QuadratureResult lehmer_integral(int s, cdouble z, double tol = 1e-12,
                                        int max_panels = 2000) {
  if (s < 1) throw invalid_argument("lehmer_integral: s must be >= 1");
  detail::require_pole_free(s, z, "lehmer_integral");
  if (z.imag() == 0.0) {
    const double zr = z.real();
    return integrate([s, zr](double t) { return 1.0 / (1.0 - zr * detail::envelope(s, t)); },
                     0.0, 1.0, tol, max_panels);
  }
  return integrate([s, z](double t) { return 1.0 / (1.0 - z * detail::envelope(s, t)); }, 0.0,
                   1.0, tol, max_panels);
}

/// The weighted integral int_0^1 Li(-k, x (1-t) t^(s-1)) dt, equal to
/// sum_{n>=1} n^k x^n / ((ns+1) C(ns,n)) for k >= 1. The k = 0 case is served
/// by lehmer_integral minus 1 instead: Li(0, .) would reproduce only the
/// n >= 1 terms while the n = 0 term of the k = 0 series is 1.
inline QuadratureResult weighted_integral(int s, int k, double x, double tol = 1e-12,
                                          int max_panels = 2000) {
  if (s < 1) throw invalid_argument("weighted_integral: s must be >= 1");
  if (k < 1)
    throw invalid_argument("weighted_integral: k must be >= 1 (use lehmer_integral - 1 for k = 0)");
  detail::require_pole_free(s, cdouble(x, 0.0), "weighted_integral");
  return integrate([s, k, x](double t) { return polylog_neg(k, x * detail::envelope(s, t)); },
                   0.0, 1.0, tol, max_panels);
}

}  // namespace lehmer
