#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "lehmer/errors.hpp"
#include "lehmer/jet.hpp"
#include "lehmer/polynomial.hpp"
#include "lehmer/roots.hpp"

namespace lehmer {

/// One summand of the closed-form root sum.
struct RootSumTerm {
  cdouble root;
  cdouble logdiff;  // Log(1 - rho) - Log(-rho), principal branches
  cdouble denom;    // rho^(s-2) (1 - s + s rho) = H'(rho) / z
};

/// Root-sum evaluation with every per-root ingredient kept for inspection.
/// `raw` is the plain (1/z) sum over roots, which equals 1 + A_s(z) (the
/// m >= 0 series); the published closed form is stated as A_s(z) itself, so
/// callers following it as printed subtract 1. For real z the imaginary part of
/// `raw` is discarded into `discarded_imag` and `value` is made exactly real.
struct RootSumBreakdown {
  std::vector<RootSumTerm> terms;
  RootSet roots;
  cdouble raw = 0.0;
  cdouble value = 0.0;
  double discarded_imag = 0.0;
};

namespace detail {

// Principal per-term logs reproduce the definite integral exactly when no
// root meets [0,1]: the segment t - rho (t in [0,1]) then never crosses the
// negative real axis. A real root inside [0,1] (1e-9 band) means the
// integral itself has a pole, so evaluation is refused.
inline void require_branch_safe(const std::vector<cdouble>& roots) {
  for (const cdouble& rho : roots) {
    const double band = 1e-9 * (1.0 + std::abs(rho));
    if (std::fabs(rho.imag()) <= band && rho.real() >= -band && rho.real() <= 1.0 + band)
      throw domain_error("branch safety: real root at " + std::to_string(rho.real()) +
                         " lies in [0,1]; the integral has a pole there and the series "
                         "domain is exceeded");
  }
}

inline void require_simple(const RootSet& roots) {
  if (roots.near_multiple)
    throw domain_error("simple-roots violation: root separation " +
                       std::to_string(roots.min_pairwise_separation) +
                       " is below the multiplicity tolerance");
}

inline cdouble log_difference(cdouble rho) {
  return principal_log(1.0 - rho) - principal_log(-rho);
}

}  // namespace detail

/// Evaluate (1/z) sum_rho [Log(1-rho) - Log(-rho)] / (rho^(s-2)(1-s+s rho))
/// over all s roots of the Lehmer polynomial. Returns the full breakdown.
inline RootSumBreakdown root_sum_breakdown(int s, cdouble z, double root_tol = 1e-12) {
  if (s < 1) throw invalid_argument("root_sum: s must be >= 1");
  if (z == cdouble(0.0)) throw domain_error("root_sum: z must be nonzero");

  RootSumBreakdown out;
  const ComplexPolynomial poly = lehmer_polynomial(s, z);
  out.roots = find_roots(poly, root_tol);
  detail::require_simple(out.roots);
  detail::require_branch_safe(out.roots.roots);

  const double denom_floor = 1e-10;
  cdouble acc = 0.0;
  for (const cdouble& rho : out.roots.roots) {
    RootSumTerm term;
    term.root = rho;
    term.logdiff = detail::log_difference(rho);
    term.denom = cpow_int(rho, s - 2) * (cdouble(1.0 - s) + static_cast<double>(s) * rho);
    if (std::abs(term.denom) < denom_floor * (1.0 + std::abs(rho)))
      throw domain_error("root_sum: |H'(rho)/z| below tolerance at rho = (" +
                         std::to_string(rho.real()) + ", " + std::to_string(rho.imag()) +
                         "); simple-root assumption violated");
    acc += term.logdiff / term.denom;
    out.terms.push_back(term);
  }
  out.raw = acc / z;

  if (z.imag() == 0.0) {
    const double imag_budget = 1e-10 * (1.0 + std::abs(out.raw.real()));
    if (std::fabs(out.raw.imag()) >= imag_budget)
      throw convergence_error("root_sum: imaginary residue " + std::to_string(out.raw.imag()) +
                              " for real z exceeds the reality budget; root set is suspect");
    out.discarded_imag = out.raw.imag();
    out.value = cdouble(out.raw.real(), 0.0);
  } else {
    out.value = out.raw;
  }
  return out;
}

/// The closed-form root-sum value; equals 1 + A_s(z) (see RootSumBreakdown).
inline cdouble root_sum(int s, cdouble z, double root_tol = 1e-12) {
  return root_sum_breakdown(s, z, root_tol).value;
}

/// Taylor jets rho(z + d) of each root to order K, by Newton iteration in
/// jet arithmetic on H(R; z + d) = 0. The order-1 coefficient is the
/// implicit-function derivative (rho^(s-1) - rho^s) / H'(rho).
inline std::vector<Jet> root_jets(int s, cdouble z, int order, double root_tol = 1e-12) {
  if (order < 0 || order > 8)
    throw invalid_argument("root_jets: order must be in 0..8");
  if (s < 1) throw invalid_argument("root_jets: s must be >= 1");
  if (z == cdouble(0.0)) throw domain_error("root_jets: z must be nonzero");

  const ComplexPolynomial poly = lehmer_polynomial(s, z);
  const RootSet base = find_roots(poly, root_tol);
  detail::require_simple(base);

  const Jet zj = Jet::variable(z, order);
  std::vector<Jet> jets;
  jets.reserve(base.roots.size());
  for (const cdouble& rho : base.roots) {
    Jet r(rho, order);
    for (int iter = 0; iter < 60; ++iter) {
      // H(R; Z) = 1 - Z R^(s-1) + Z R^s ; dH/dR = Z R^(s-2) ((1-s) + s R)
      const Jet r_sm2 = r.pow_int(s - 2);
      const Jet r_sm1 = s >= 2 ? r_sm2 * r : r.pow_int(s - 1);
      const Jet r_s = r_sm1 * r;
      const Jet h = 1.0 - zj * r_sm1 + zj * r_s;
      const Jet dh = zj * r_sm2 * (cdouble(1.0 - s) + static_cast<double>(s) * r);
      const Jet step = h / dh;
      r = r - step;
      if (step.max_abs() < 1e-15 * (1.0 + r.max_abs())) break;
    }
    jets.push_back(r);
  }
  return jets;
}

/// Stirling numbers of the second kind S(k, 0..k), exact.
inline std::vector<std::uint64_t> stirling2_row(int k) {
  if (k < 0) throw invalid_argument("stirling2_row: k must be >= 0");
  std::vector<std::uint64_t> row{1};  // S(0,0) = 1
  for (int n = 1; n <= k; ++n) {
    std::vector<std::uint64_t> next(static_cast<std::size_t>(n) + 1, 0);
    for (int j = 1; j <= n; ++j) {
      const std::uint64_t keep = j < n ? row[static_cast<std::size_t>(j)] : 0;
      next[static_cast<std::size_t>(j)] =
          static_cast<std::uint64_t>(j) * keep + row[static_cast<std::size_t>(j) - 1];
    }
    row = std::move(next);
  }
  return row;
}

/// The Euler operator (z d/dz)^k applied to the root-sum, evaluated in jet
/// arithmetic: with f_j the degree-j Taylor coefficient at z,
/// (z d/dz)^k f = sum_j S(k,j) z^j j! f_j. The additive constant 1 carried
/// by the root sum is annihilated, so this returns
/// sum_{n>=1} n^k z^n / ((sn+1) C(sn,n)).
inline double euler_apply(int s, double z, int k, double root_tol = 1e-12) {
  if (k < 1 || k > 8) throw invalid_argument("euler_apply: k must be in 1..8");
  if (z == 0.0) throw domain_error("euler_apply: z must be nonzero");

  const std::vector<Jet> jets = root_jets(s, cdouble(z, 0.0), k, root_tol);
  std::vector<cdouble> base_roots;
  base_roots.reserve(jets.size());
  for (const Jet& j : jets) base_roots.push_back(j.value());
  detail::require_branch_safe(base_roots);

  const Jet zj = Jet::variable(cdouble(z, 0.0), k);
  Jet sum(0.0, k);
  for (const Jet& r : jets) {
    const Jet logdiff = (1.0 - r).log() - (-r).log();
    const Jet denom = r.pow_int(s - 2) * (cdouble(1.0 - s) + static_cast<double>(s) * r);
    sum = sum + logdiff / denom;
  }
  const Jet f = sum / zj;

  const std::vector<std::uint64_t> stirling = stirling2_row(k);
  cdouble result = 0.0;
  double z_power = 1.0;
  double factorial = 1.0;
  for (int j = 1; j <= k; ++j) {
    z_power *= z;
    factorial *= j;
    result += static_cast<double>(stirling[static_cast<std::size_t>(j)]) * z_power * factorial *
              f.coeff(j);
  }

  const double imag_budget = 1e-9 * (1.0 + std::abs(result.real()));
  if (std::fabs(result.imag()) >= imag_budget)
    throw convergence_error("euler_apply: imaginary residue " + std::to_string(result.imag()) +
                            " exceeds the reality budget");
  return result.real();
}

/// Horner evaluation of a coefficient list (c0 + c1 x + ...).
inline cdouble eval_coefficients(const std::vector<cdouble>& coeffs, cdouble x) {
  cdouble acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

/// Sum over the roots of H of p(rho) [Log(1-rho) - Log(-rho)] / q(rho),
/// principal branches (the Example-6 shape of root expression).
inline cdouble root_expression_sum(const ComplexPolynomial& h, const std::vector<cdouble>& p,
                                   const std::vector<cdouble>& q, double root_tol = 1e-12) {
  if (p.empty() || q.empty())
    throw invalid_argument("root_expression_sum: empty coefficient list");
  const RootSet roots = find_roots(h, root_tol);
  detail::require_simple(roots);
  detail::require_branch_safe(roots.roots);

  double q_scale = 0.0;
  for (const auto& c : q) q_scale = std::max(q_scale, std::abs(c));
  const double q_floor = 1e-10 * (1.0 + q_scale);

  cdouble acc = 0.0;
  for (const cdouble& rho : roots.roots) {
    const cdouble qv = eval_coefficients(q, rho);
    if (std::abs(qv) < q_floor)
      throw domain_error("root_expression_sum: q vanishes at root (" +
                         std::to_string(rho.real()) + ", " + std::to_string(rho.imag()) + ")");
    acc += eval_coefficients(p, rho) * detail::log_difference(rho) / qv;
  }
  return acc;
}

}  // namespace lehmer
