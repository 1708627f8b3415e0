#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "lehmer/errors.hpp"
#include "lehmer/polynomial.hpp"

namespace lehmer {

/// Principal complex logarithm with Im in (-pi, pi]: negative reals map to
/// log|x| + i pi regardless of the sign of a (possibly signed-zero)
/// imaginary part. std::log would send -0 imaginary to the -i pi side.
inline cdouble principal_log(cdouble w) {
  if (w == cdouble(0.0)) throw domain_error("principal_log: log of zero");
  if (w.imag() == 0.0) w = cdouble(w.real(), +0.0);
  return std::log(w);
}

/// Truncated Taylor expansion a0 + a1 d + ... + aK d^K (terms beyond d^K are
/// dropped). Used to push derivatives through the root-sum formula.
class Jet {
 public:
  Jet() : coeffs_(1, cdouble(0.0)) {}
  Jet(cdouble constant, int order) : coeffs_(static_cast<std::size_t>(order) + 1, cdouble(0.0)) {
    if (order < 0) throw invalid_argument("Jet: order must be >= 0");
    coeffs_[0] = constant;
  }

  /// The jet of the expansion variable itself: value + d.
  static Jet variable(cdouble value, int order) {
    Jet j(value, order);
    if (order >= 1) j.coeffs_[1] = 1.0;
    return j;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const cdouble& coeff(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  cdouble& coeff(int i) { return coeffs_[static_cast<std::size_t>(i)]; }
  const cdouble& value() const { return coeffs_[0]; }

  double max_abs() const {
    double m = 0.0;
    for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
  }

  friend Jet operator-(const Jet& a) {
    Jet r = a;
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    Jet r = a;
    for (int i = 0; i <= r.order(); ++i) r.coeff(i) += b.coeff(i);
    return r;
  }

  friend Jet operator-(const Jet& a, const Jet& b) {
    Jet r = a;
    for (int i = 0; i <= r.order(); ++i) r.coeff(i) -= b.coeff(i);
    return r;
  }

  friend Jet operator*(const Jet& a, const Jet& b) {
    Jet r(0.0, a.order());
    for (int i = 0; i <= a.order(); ++i) {
      if (a.coeff(i) == cdouble(0.0)) continue;
      for (int j = 0; i + j <= a.order(); ++j) r.coeff(i + j) += a.coeff(i) * b.coeff(j);
    }
    return r;
  }

  friend Jet operator+(const Jet& a, cdouble s) {
    Jet r = a;
    r.coeff(0) += s;
    return r;
  }
  friend Jet operator+(cdouble s, const Jet& a) { return a + s; }
  friend Jet operator-(const Jet& a, cdouble s) { return a + (-s); }
  friend Jet operator-(cdouble s, const Jet& a) { return (-a) + s; }
  friend Jet operator*(const Jet& a, cdouble s) {
    Jet r = a;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }
  friend Jet operator*(cdouble s, const Jet& a) { return a * s; }
  friend Jet operator/(const Jet& a, const Jet& b) { return a * b.reciprocal(); }
  friend Jet operator/(cdouble s, const Jet& b) { return b.reciprocal() * s; }
  friend Jet operator/(const Jet& a, cdouble s) { return a * (1.0 / s); }

  /// 1 / this, by the standard division recurrence; refuses a leading
  /// coefficient too small to divide by (near-multiple-root situations).
  Jet reciprocal(double leading_tol = 1e-14) const {
    const cdouble b0 = coeffs_[0];
    if (std::abs(b0) < leading_tol * (1.0 + max_abs()))
      throw domain_error("Jet: division by jet with near-zero leading coefficient (" +
                         std::to_string(std::abs(b0)) + ")");
    Jet r(1.0 / b0, order());
    for (int n = 1; n <= order(); ++n) {
      cdouble acc = 0.0;
      for (int j = 1; j <= n; ++j) acc += coeff(j) * r.coeff(n - j);
      r.coeff(n) = -acc / b0;
    }
    return r;
  }

  /// Integer power with negative exponents via reciprocal.
  Jet pow_int(int e) const {
    if (e < 0) return reciprocal().pow_int(-e);
    Jet r(1.0, order());
    Jet base = *this;
    for (int n = e; n > 0; n >>= 1) {
      if (n & 1) r = r * base;
      base = base * base;
    }
    return r;
  }

  /// log of the jet (principal branch at the leading coefficient), via the
  /// recurrence n g0 f_n = n g_n - sum_{j=1}^{n-1} (n-j) g_j f_{n-j}.
  Jet log() const {
    const cdouble g0 = coeffs_[0];
    if (std::abs(g0) == 0.0) throw domain_error("Jet::log: leading coefficient is zero");
    Jet f(principal_log(g0), order());
    for (int n = 1; n <= order(); ++n) {
      cdouble acc = static_cast<double>(n) * coeff(n);
      for (int j = 1; j < n; ++j) acc -= static_cast<double>(n - j) * coeff(j) * f.coeff(n - j);
      f.coeff(n) = acc / (static_cast<double>(n) * g0);
    }
    return f;
  }

 private:
  std::vector<cdouble> coeffs_;
};

}  // namespace lehmer
