#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "lehmer/errors.hpp"
#include "lehmer/polynomial.hpp"

namespace lehmer {

/// All roots of a polynomial plus the diagnostics needed to judge them.
struct RootSet {
  std::vector<cdouble> roots;
  std::vector<double> residual_per_root;     // |H(rho)|
  std::vector<double> newton_step_per_root;  // |H(rho)/H'(rho)|
  double min_pairwise_separation = std::numeric_limits<double>::infinity();
  bool near_multiple = false;  // some pair closer than the multiplicity tolerance
};

namespace detail {

// Roots closer than this are treated as (numerically) multiple; the
// closed-form root sum refuses to use them.
inline constexpr double kMultiplicityTol = 1e-8;

// Aberth stops once every correction is below this relative step.
inline constexpr double kStepTol = 1e-13;

inline double pair_multiplicity_tol(cdouble a, cdouble b) {
  return kMultiplicityTol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

}  // namespace detail

/// Simultaneous Aberth-Ehrlich iteration followed by Newton polishing.
/// Initial guesses sit on a circle of radius 1 + max|ci/cd|, rotated by a
/// fixed irrational offset so no guess lands on a symmetry axis. Residuals
/// must come out below tol * (1 + max|ci|) or a solver_error is raised with
/// the best iterates attached.
inline RootSet find_roots(const ComplexPolynomial& poly, double tol = 1e-12) {
  detail::require_solvable(poly);
  const int d = poly.degree();
  const double coeff_scale = 1.0 + poly.max_coefficient_magnitude();
  const double residual_tol = tol * coeff_scale;

  std::vector<cdouble> x(static_cast<std::size_t>(d));
  if (d == 1) {
    x[0] = -poly.coefficients[0] / poly.coefficients[1];
  } else {
    double ratio_max = 0.0;
    const double lead = std::abs(poly.leading());
    for (int i = 0; i < d; ++i)
      ratio_max = std::max(ratio_max, std::abs(poly.coefficients[static_cast<std::size_t>(i)]) / lead);
    const double radius = 1.0 + ratio_max;
    const double offset = std::numbers::sqrt2;  // fixed irrational angle, breaks symmetry
    for (int j = 0; j < d; ++j) {
      const double theta = 2.0 * std::numbers::pi * j / d + offset;
      x[static_cast<std::size_t>(j)] = std::polar(radius, theta);
    }

    const int max_iterations = 300;
    bool settled = false;
    for (int iter = 0; iter < max_iterations && !settled; ++iter) {
      double worst_step = 0.0;
      for (int j = 0; j < d; ++j) {
        const cdouble xj = x[static_cast<std::size_t>(j)];
        const cdouble p = eval_poly(poly, xj);
        if (std::abs(p) == 0.0) continue;
        const cdouble dp = eval_derivative(poly, xj);
        if (std::abs(dp) == 0.0) {
          // stationary point; nudge off it and retry next sweep
          x[static_cast<std::size_t>(j)] += cdouble(1e-6, 1e-6) * (1.0 + std::abs(xj));
          worst_step = std::numeric_limits<double>::infinity();
          continue;
        }
        const cdouble newton = p / dp;
        cdouble repulsion = 0.0;
        for (int i = 0; i < d; ++i) {
          if (i == j) continue;
          const cdouble diff = xj - x[static_cast<std::size_t>(i)];
          if (std::abs(diff) == 0.0) continue;
          repulsion += 1.0 / diff;
        }
        const cdouble denom = 1.0 - newton * repulsion;
        const cdouble correction = (std::abs(denom) == 0.0) ? newton : newton / denom;
        x[static_cast<std::size_t>(j)] = xj - correction;
        worst_step = std::max(worst_step, std::abs(correction) / (1.0 + std::abs(xj)));
      }
      settled = worst_step < detail::kStepTol;
    }
  }

  // Newton polishing, at most 5 steps per root.
  RootSet out;
  out.roots = std::move(x);
  out.residual_per_root.resize(static_cast<std::size_t>(d));
  out.newton_step_per_root.resize(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    cdouble& root = out.roots[static_cast<std::size_t>(j)];
    double last_step = 0.0;
    for (int polish = 0; polish < 5; ++polish) {
      const cdouble p = eval_poly(poly, root);
      const cdouble dp = eval_derivative(poly, root);
      if (std::abs(dp) == 0.0 || std::abs(p) == 0.0) break;
      const cdouble step = p / dp;
      last_step = std::abs(step);
      if (!std::isfinite(last_step)) break;
      root -= step;
      if (last_step < detail::kStepTol * (1.0 + std::abs(root))) break;
    }
    const cdouble p = eval_poly(poly, root);
    const cdouble dp = eval_derivative(poly, root);
    out.residual_per_root[static_cast<std::size_t>(j)] = std::abs(p);
    out.newton_step_per_root[static_cast<std::size_t>(j)] =
        std::abs(dp) > 0.0 ? std::abs(p / dp) : std::numeric_limits<double>::infinity();
  }

  double worst_residual = 0.0;
  for (double r : out.residual_per_root) worst_residual = std::max(worst_residual, r);
  if (!(worst_residual <= residual_tol))
    throw solver_error("find_roots: iteration did not converge; worst residual " +
                           std::to_string(worst_residual) + " exceeds " +
                           std::to_string(residual_tol),
                       out.roots, worst_residual);

  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const cdouble a = out.roots[static_cast<std::size_t>(i)];
      const cdouble b = out.roots[static_cast<std::size_t>(j)];
      const double sep = std::abs(a - b);
      out.min_pairwise_separation = std::min(out.min_pairwise_separation, sep);
      if (sep < detail::pair_multiplicity_tol(a, b)) out.near_multiple = true;
    }
  return out;
}

/// Partial-fraction data of 1/H: for simple roots,
/// 1/H(x) = sum_rho (1/H'(rho)) / (x - rho).
inline std::vector<std::pair<cdouble, cdouble>> residues(const ComplexPolynomial& poly,
                                                         const RootSet& roots) {
  detail::require_solvable(poly);
  if (roots.near_multiple)
    throw domain_error("residues: root set is flagged near-multiple; "
                       "partial fractions need simple roots");
  if (static_cast<int>(roots.roots.size()) != poly.degree())
    throw invalid_argument("residues: root count does not match polynomial degree");

  const double derivative_floor = 1e-10 * (1.0 + poly.max_coefficient_magnitude());
  std::vector<std::pair<cdouble, cdouble>> out;
  out.reserve(roots.roots.size());
  for (const cdouble& rho : roots.roots) {
    const cdouble dp = eval_derivative(poly, rho);
    if (std::abs(dp) < derivative_floor)
      throw domain_error("residues: |H'(rho)| below tolerance at rho = (" +
                         std::to_string(rho.real()) + ", " + std::to_string(rho.imag()) +
                         "); root is numerically multiple");
    out.emplace_back(rho, 1.0 / dp);
  }
  return out;
}

}  // namespace lehmer
