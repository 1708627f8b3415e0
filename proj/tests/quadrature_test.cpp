#include "lehmer/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "lehmer/series.hpp"
#include "oracle_support.hpp"

namespace {

using lehmer::cdouble;
constexpr double kPi = std::numbers::pi;

TEST(Integrate, ConstantFunction) {
  const auto r = lehmer::integrate([](double) { return 1.0; }, 0.0, 1.0);
  EXPECT_NEAR(r.real(), 1.0, 1e-15);
  EXPECT_TRUE(r.converged);
}

TEST(Integrate, ArctanKernel) {
  // antiderivative of 1/(1 - 2t + 2t^2) is arctan(2t - 1)
  const auto r = lehmer::integrate([](double t) { return 1.0 / (1.0 - 2.0 * t + 2.0 * t * t); },
                                   0.0, 1.0);
  EXPECT_NEAR(r.real(), kPi / 2.0, 1e-13);
}

TEST(Integrate, CubicMonomial) {
  const auto r = lehmer::integrate([](double t) { return t * t * t; }, 0.0, 1.0);
  EXPECT_NEAR(r.real(), 0.25, 1e-15);
}

TEST(Integrate, PolynomialExactnessUpToDegree22) {
  // single Kronrod panel is exact (to roundoff) through degree 22
  for (int degree = 0; degree <= 22; ++degree) {
    auto f = [degree](double t) {
      double p = 1.0;
      for (int i = 0; i < degree; ++i) p *= t;
      return p;
    };
    const auto panel = lehmer::detail::gauss_kronrod_15(f, 0.0, 1.0);
    EXPECT_NEAR(panel.value, 1.0 / (degree + 1), 1e-14) << "degree " << degree;
  }
}

TEST(Integrate, ComplexIntegrand) {
  const auto r = lehmer::integrate(
      [](double t) { return cdouble(std::cos(kPi * t), std::sin(kPi * t)); }, 0.0, 1.0);
  EXPECT_NEAR(r.value.real(), 0.0, 1e-14);
  EXPECT_NEAR(r.value.imag(), 2.0 / kPi, 1e-13);
}

TEST(Integrate, ReportsNonConvergenceAtPanelCap) {
  // steep spike; 2 panels cannot resolve it at tol 1e-12
  const auto r = lehmer::integrate(
      [](double t) { return 1.0 / (1e-6 + (t - 0.37) * (t - 0.37)); }, 0.0, 1.0, 1e-12, 2);
  EXPECT_FALSE(r.converged);
  EXPECT_GT(r.error_estimate, 1e-12);
}

TEST(Integrate, RejectsBadArguments) {
  EXPECT_THROW(lehmer::integrate([](double) { return 1.0; }, 1.0, 0.0), lehmer::invalid_argument);
  EXPECT_THROW(lehmer::integrate([](double) { return 1.0; }, 0.0, 1.0, -1.0),
               lehmer::invalid_argument);
}

TEST(LehmerIntegral, DegreeTwoClosedForm) {
  EXPECT_NEAR(lehmer::lehmer_integral(2, 2.0).real(), kPi / 2.0, 1e-12);
}

TEST(LehmerIntegral, ZeroArgument) {
  EXPECT_NEAR(lehmer::lehmer_integral(2, 0.0).real(), 1.0, 1e-14);
  EXPECT_NEAR(lehmer::lehmer_integral(5, 0.0).real(), 1.0, 1e-14);
}

TEST(LehmerIntegral, UnitArgumentClosedForm) {
  // 2 pi sqrt(3) / 9, also the n >= 0 direct sum
  const double want = 2.0 * kPi * std::sqrt(3.0) / 9.0;
  EXPECT_NEAR(lehmer::lehmer_integral(2, 1.0).real(), want, 1e-12);
  const double direct =
      1.0 + oracle::as_double(oracle::exact_series_sum(2, 0, oracle::BigRational(1), 1, 120));
  EXPECT_NEAR(lehmer::lehmer_integral(2, 1.0).real(), direct, 1e-12);
}

TEST(LehmerIntegral, MatchesDirectSumOnGrid) {
  int points = 0;
  for (int s : {2, 3, 4}) {
    const double r = lehmer::radius(s);
    for (double f : {-0.9, -0.6, -0.3, 0.2, 0.45, 0.7, 0.9}) {
      const double z = f * r;
      const double integral = lehmer::lehmer_integral(s, z).real();
      const double series = lehmer::sum_direct({s, 0, z, 1}).value.real();
      EXPECT_LT(std::fabs(integral - 1.0 - series), 1e-10) << "s=" << s << " z=" << z;
      ++points;
    }
  }
  EXPECT_GE(points, 20);
}

TEST(LehmerIntegral, ComplexArgument) {
  const cdouble z(1.0, 0.5);
  const auto integral = lehmer::lehmer_integral(2, z);
  const auto series = lehmer::sum_direct({2, 0, z, 1});
  EXPECT_LT(std::abs(integral.value - 1.0 - series.value), 1e-11);
}

TEST(LehmerIntegral, PoleOnPathRejected) {
  try {
    lehmer::lehmer_integral(2, 4.0);
    FAIL() << "expected domain_error";
  } catch (const lehmer::domain_error& e) {
    EXPECT_NE(std::string(e.what()).find("t = 0.5"), std::string::npos);
  }
  EXPECT_THROW(lehmer::lehmer_integral(2, 5.0), lehmer::domain_error);
  EXPECT_THROW(lehmer::lehmer_integral(3, 6.75), lehmer::domain_error);
  // negative z has no pole
  EXPECT_NO_THROW(lehmer::lehmer_integral(2, -50.0));
}

TEST(WeightedIntegral, PaperAnchoredValue) {
  // s=2, k=2, x=2 -> 1 + pi/2
  EXPECT_NEAR(lehmer::weighted_integral(2, 2, 2.0).real(), 1.0 + kPi / 2.0, 1e-11);
}

TEST(WeightedIntegral, ZeroArgument) {
  EXPECT_NEAR(lehmer::weighted_integral(2, 1, 0.0).real(), 0.0, 1e-15);
}

TEST(WeightedIntegral, UnitArgumentClosedForm) {
  // (18 - 2 sqrt(3) pi) / 27
  const double want = (18.0 - 2.0 * std::sqrt(3.0) * kPi) / 27.0;
  EXPECT_NEAR(lehmer::weighted_integral(2, 1, 1.0).real(), want, 1e-12);
}

TEST(WeightedIntegral, MatchesDirectSumOnGrid) {
  for (int k : {1, 2, 3}) {
    for (int s : {2, 3, 4}) {
      const double r = lehmer::radius(s);
      for (double f : {-0.5, -0.25, 0.25, 0.5}) {
        const double x = f * r;
        const double integral = lehmer::weighted_integral(s, k, x).real();
        const double series = lehmer::sum_direct({s, k, x, 1}).value.real();
        EXPECT_LT(std::fabs(integral - series), 1e-9) << "s=" << s << " k=" << k << " x=" << x;
      }
    }
  }
}

TEST(WeightedIntegral, RejectsWeightZeroAndPoles) {
  EXPECT_THROW(lehmer::weighted_integral(2, 0, 1.0), lehmer::invalid_argument);
  EXPECT_THROW(lehmer::weighted_integral(2, 1, 4.0), lehmer::domain_error);
}

}  // namespace
