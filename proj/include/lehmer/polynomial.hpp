#pragma once

#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>
#include <vector>

#include "lehmer/errors.hpp"

namespace lehmer {

using cdouble = std::complex<double>;

/// x^e for integer e, negative exponents via inversion.
inline cdouble cpow_int(cdouble x, int e) {
  if (e < 0) return 1.0 / cpow_int(x, -e);
  cdouble r = 1.0;
  cdouble b = x;
  for (int n = e; n > 0; n >>= 1) {
    if (n & 1) r *= b;
    b *= b;
  }
  return r;
}

/// Dense univariate polynomial c0 + c1 x + ... + cd x^d over complex doubles.
/// Coefficients are kept exactly as given (no monic normalization); the
/// degree is the index of the last stored coefficient and the leading
/// coefficient must be nonzero.
struct ComplexPolynomial {
  std::vector<cdouble> coefficients;

  int degree() const { return static_cast<int>(coefficients.size()) - 1; }
  const cdouble& leading() const { return coefficients.back(); }

  double max_coefficient_magnitude() const {
    double m = 0;
    for (const auto& c : coefficients) m = std::max(m, std::abs(c));
    return m;
  }
};

namespace detail {
inline void require_solvable(const ComplexPolynomial& poly) {
  if (poly.degree() < 1) throw invalid_argument("polynomial must have degree >= 1");
  if (std::abs(poly.leading()) == 0.0)
    throw invalid_argument("polynomial leading coefficient must be nonzero");
}
}  // namespace detail

/// The polynomial H(X) = 1 - z X^(s-1) + z X^s whose roots drive the
/// closed-form evaluation. For s = 1 the constant and X^(s-1) terms merge:
/// H(X) = (1 - z) + z X.
inline ComplexPolynomial lehmer_polynomial(int s, cdouble z) {
  if (s < 1) throw invalid_argument("lehmer_polynomial: s must be >= 1");
  if (z == cdouble(0.0))
    throw domain_error("lehmer_polynomial: z = 0 gives the degenerate polynomial H = 1 "
                       "(no roots; the series value is 0)");
  ComplexPolynomial poly;
  poly.coefficients.assign(static_cast<std::size_t>(s) + 1, cdouble(0.0));
  if (s == 1) {
    poly.coefficients[0] = 1.0 - z;
    poly.coefficients[1] = z;
  } else {
    poly.coefficients[0] = 1.0;
    poly.coefficients[static_cast<std::size_t>(s) - 1] = -z;
    poly.coefficients[static_cast<std::size_t>(s)] = z;
  }
  return poly;
}

/// Horner evaluation on the raw coefficients.
inline cdouble eval_poly(const ComplexPolynomial& poly, cdouble x) {
  cdouble acc = 0.0;
  for (auto it = poly.coefficients.rbegin(); it != poly.coefficients.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

/// Horner evaluation of the derivative sum i*ci x^(i-1).
inline cdouble eval_derivative(const ComplexPolynomial& poly, cdouble x) {
  const int d = poly.degree();
  if (d < 1) return 0.0;
  cdouble acc = static_cast<double>(d) * poly.coefficients[static_cast<std::size_t>(d)];
  for (int i = d - 1; i >= 1; --i)
    acc = acc * x + static_cast<double>(i) * poly.coefficients[static_cast<std::size_t>(i)];
  return acc;
}

/// Closed form of H'(x) for the Lehmer polynomial: z x^(s-2) (1 - s + s x).
/// Kept separate so the Horner derivative can be checked against it.
inline cdouble lehmer_derivative(int s, cdouble z, cdouble x) {
  return z * cpow_int(x, s - 2) * (cdouble(1.0 - s) + static_cast<double>(s) * x);
}

}  // namespace lehmer
