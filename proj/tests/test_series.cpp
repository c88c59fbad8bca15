#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "conforma/errors.hpp"
#include "conforma/series.hpp"

using namespace conforma;

namespace {

double frac_time(double t, double t0, double alpha) {
  return std::pow(t - t0, alpha) / alpha;
}

}  // namespace

TEST(TaylorCoeffs, FractionalExponential) {
  for (double alpha : {0.5, 0.8}) {
    auto s = taylor_coeffs(fn::frac_exp(1.0, alpha, 0.3), 0.3, alpha, 3);
    double fact = 1;
    for (int k = 0; k <= 3; ++k) {
      if (k) fact *= k;
      EXPECT_NEAR(s.coeffs[k], 1.0 / (std::pow(alpha, k) * fact), 1e-4) << alpha << " " << k;
    }
  }
}

TEST(TaylorCoeffs, ConstantAndLimits) {
  auto s = taylor_coeffs(fn::constant(2.5), 0.0, 0.5, 3);
  EXPECT_NEAR(s.coeffs[0], 2.5, 1e-12);
  for (int k = 1; k <= 3; ++k) EXPECT_NEAR(s.coeffs[k], 0.0, 1e-6);
  EXPECT_THROW(taylor_coeffs(fn::constant(1), 0.0, 0.5, 5), DomainError);
}

TEST(TaylorCoeffs, GeometricFunction) {
  const double alpha = 0.5;
  RealFn f([=](double t) { return 1.0 / (1.0 - frac_time(t, 0.0, alpha)); });
  auto s = taylor_coeffs(f, 0.0, alpha, 3);
  auto exact = builtin_series(SeriesKind::frac_geom, 0.0, alpha, 3);
  for (int k = 0; k <= 3; ++k) EXPECT_NEAR(s.coeffs[k], exact.coeffs[k], 1e-4 * exact.coeffs[k]);
  EXPECT_NEAR(eval_series(s, 0.0001), f(0.0001), 1e-6);
}

TEST(EvalSeries, Examples) {
  auto e = builtin_series(SeriesKind::frac_exp, 1.0, 0.5, 20);
  EXPECT_DOUBLE_EQ(eval_series(e, 1.0), 1.0);
  auto g = builtin_series(SeriesKind::frac_geom, 0.0, 0.5, 80);
  EXPECT_NEAR(eval_series(g, 0.09), 2.5, 1e-12);
  EXPECT_THROW(eval_series(g, 0.25), DomainError);
  EXPECT_THROW(eval_series(g, -0.1), DomainError);
  auto s = builtin_series(SeriesKind::frac_sin, 0.0, 0.5, 40);
  double t = std::pow(std::numbers::pi / 4, 2);
  EXPECT_NEAR(eval_series(s, t), 1.0, 1e-12);
}

TEST(BuiltinSeries, Examples) {
  auto c = builtin_series(SeriesKind::frac_cos, 2.0, 0.7, 10);
  EXPECT_DOUBLE_EQ(eval_series(c, 2.0), 1.0);
  EXPECT_EQ(c.coeffs[1], 0.0);
  auto s = builtin_series(SeriesKind::frac_sin, 2.0, 0.7, 10);
  EXPECT_DOUBLE_EQ(eval_series(s, 2.0), 0.0);
  EXPECT_EQ(s.coeffs[0], 0.0);
  EXPECT_NEAR(s.coeffs[3], -1.0 / (std::pow(0.7, 3) * 6), 1e-15);
  auto g = builtin_series(SeriesKind::frac_geom, 0.0, 0.5, 3);
  EXPECT_NEAR(partial_sum(g, 3, 0.04), 1.624, 1e-13);
  EXPECT_LT(partial_sum(g, 3, 0.04), 1.0 / (1 - 0.4));
  EXPECT_NEAR(g.radius, 0.25, 1e-15);
}

TEST(BuiltinSeries, ClosedFormsOnGrid) {
  for (double alpha : {0.3, 0.5, 0.8}) {
    auto e = builtin_series(SeriesKind::frac_exp, 0.0, alpha, 40);
    auto s = builtin_series(SeriesKind::frac_sin, 0.0, alpha, 40);
    auto c = builtin_series(SeriesKind::frac_cos, 0.0, alpha, 40);
    for (double t = 0.0; t <= 2.0; t += 0.125) {
      double u = frac_time(t, 0.0, alpha);
      EXPECT_NEAR(eval_series(e, t), std::exp(u), 1e-10 * std::exp(u));
      if (u < 4) {
        EXPECT_NEAR(eval_series(s, t), std::sin(u), 1e-10);
        EXPECT_NEAR(eval_series(c, t), std::cos(u), 1e-10);
      }
    }
  }
}

TEST(RemainderBound, Examples) {
  EXPECT_NEAR(remainder_bound(1, 2, 0.5, 0.0, 0.25), 1.0 / 6, 1e-15);
  EXPECT_EQ(remainder_bound(1, 2, 0.5, 1.0, 1.0), 0.0);
  EXPECT_NEAR(remainder_bound(1, 3, 1.0, 0.0, 0.5), std::pow(0.5, 4) / 24, 1e-16);
}

TEST(RemainderBound, HoldsForExponentialPartialSums) {
  for (double alpha : {0.3, 0.5, 0.8}) {
    const double t0 = 0.5;
    auto e = builtin_series(SeriesKind::frac_exp, t0, alpha, 30);
    double M = std::exp(frac_time(t0 + 1, t0, alpha));
    for (int n = 0; n <= 8; ++n) {
      for (double t = t0; t <= t0 + 1; t += 0.05) {
        double err = std::abs(std::exp(frac_time(t, t0, alpha)) - partial_sum(e, n, t));
        EXPECT_LE(err, remainder_bound(M, n, alpha, t0, t) * (1 + 1e-12) + 1e-15);
      }
    }
  }
}

TEST(RatioRadius, Examples) {
  EXPECT_TRUE(std::isinf(ratio_radius(builtin_series(SeriesKind::frac_exp, 0, 0.5, 30))));
  EXPECT_NEAR(ratio_radius(builtin_series(SeriesKind::frac_geom, 0, 0.5, 30)), 0.25, 1e-12);
  FracSeries poly{0.0, 0.5, {1, 2, 3, 0, 0, 0, 0}};
  EXPECT_TRUE(std::isinf(ratio_radius(poly)));
  FracSeries tiny{0.0, 0.5, {1, 2}};
  EXPECT_THROW(ratio_radius(tiny), DomainError);
}

TEST(TermDerivative, SineSeriesBecomesCosineSeries) {
  for (double alpha : {0.3, 0.5, 0.8, 1.0}) {
    auto s = builtin_series(SeriesKind::frac_sin, 0.0, alpha, 41);
    auto c = builtin_series(SeriesKind::frac_cos, 0.0, alpha, 40);
    auto d = term_derivative(s);
    ASSERT_EQ(d.coeffs.size(), c.coeffs.size());
    for (std::size_t k = 0; k < c.coeffs.size(); ++k) {
      double ulp = std::abs(c.coeffs[k]) * std::numeric_limits<double>::epsilon();
      EXPECT_LE(std::abs(d.coeffs[k] - c.coeffs[k]), 4 * ulp) << alpha << " " << k;
    }
  }
}

TEST(SeriesText, RoundTrip) {
  auto g = builtin_series(SeriesKind::frac_geom, 0.25, 0.7, 6);
  auto back = series_from_text(to_text(g));
  EXPECT_EQ(back.t0, g.t0);
  EXPECT_EQ(back.alpha, g.alpha);
  EXPECT_EQ(back.radius, g.radius);
  EXPECT_EQ(back.coeffs, g.coeffs);
  auto e = series_from_text(to_text(builtin_series(SeriesKind::frac_exp, 0, 0.5, 3)));
  EXPECT_TRUE(std::isinf(e.radius));
  EXPECT_THROW(series_from_text("0 0.5 3 inf\n1\n2\n"), DomainError);
}
