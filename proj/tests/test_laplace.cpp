#include <gtest/gtest.h>

#include <cmath>

#include "conforma/diff.hpp"
#include "conforma/errors.hpp"
#include "conforma/laplace.hpp"
#include "oracles.hpp"

using namespace conforma;

TEST(LaplaceNumeric, Examples) {
  for (double alpha : {0.3, 0.5, 1.0}) {
    for (double t0 : {0.0, 2.0}) {
      EXPECT_NEAR(laplace_numeric(fn::constant(1), {t0, alpha, 2.0, 0.0}), 0.5, 1e-10);
    }
    EXPECT_NEAR(laplace_numeric(fn::frac_exp(1, alpha, 0), {0, alpha, 3.0, 1.0}), 0.5, 1e-9);
  }
  EXPECT_NEAR(laplace_numeric(fn::polynomial({0, 1}), {0, 0.5, 1.0, 0.0}), 0.5, 1e-9);
  EXPECT_THROW(laplace_numeric(fn::constant(1), {0, 0.5, 1.0, 1.0}), DivergenceError);
}

TEST(LaplaceTable, Examples) {
  EXPECT_DOUBLE_EQ(laplace_table({TableKind::one}, 0, 0.5, 4.0), 0.25);
  EXPECT_NEAR(laplace_table({TableKind::frac_sin, 2.0}, 0, 0.5, 1.0), 0.4, 1e-15);
  TableEntry damped{TableKind::damped, 1.0, TableKind::frac_sin, 1.0};
  EXPECT_NEAR(laplace_table(damped, 0, 0.5, 0.0), 0.5, 1e-15);
  EXPECT_NEAR(laplace_table({TableKind::t}, 0, 0.5, 1.0), 0.5, 1e-14);
  EXPECT_THROW(laplace_table({TableKind::frac_exp, 2.0}, 0, 0.5, 1.5), DomainError);
  EXPECT_THROW(laplace_table({TableKind::t_pow, 1.0}, 1.0, 0.5, 1.5), DomainError);
}

TEST(LaplaceTable, PrintedSineFormIsOffByOmega) {
  // Quadrature of the defining weighted integral with t0 = 0, truncated where
  // e^{-s t^alpha/alpha} < e^{-40}.
  const double alpha = 0.5, omega = 2.0, s = 1.0;
  double direct = oracle::tanh_sinh(
      [&](double t) {
        double u = std::pow(t, alpha) / alpha;
        return std::exp(-s * u) * std::sin(omega * u) * std::pow(t, alpha - 1);
      },
      0.0, 400.0, 14);
  double table = laplace_table({TableKind::frac_sin, omega}, 0, alpha, s);
  EXPECT_NEAR(direct, table, 1e-8);
  double printed = 1.0 / (omega * omega + s * s);
  EXPECT_NEAR(table / printed, omega, 1e-12);
}

TEST(LaplaceTable, AgreesWithNumericTransform) {
  const TableEntry entries[] = {
      {TableKind::one},
      {TableKind::t},
      {TableKind::t_pow, 0.7},
      {TableKind::frac_exp, -0.5},
      {TableKind::frac_sin, 1.5},
      {TableKind::frac_cos, 0.8},
      {TableKind::damped, 0.5, TableKind::frac_cos, 2.0},
  };
  for (const auto& e : entries) {
    for (double alpha : {0.3, 0.5, 0.8}) {
      for (double t0 : {0.0, 1.0}) {
        if (e.kind == TableKind::t_pow && t0 != 0.0) continue;
        for (double ds : {0.5, 1.0, 2.0}) {
          double s = region_boundary(e) + ds;
          double closed = laplace_table(e, t0, alpha, s);
          double numeric = laplace_numeric(table_function(e, t0, alpha),
                                           {t0, alpha, s, region_boundary(e)});
          EXPECT_NEAR(numeric, closed, 1e-6 * std::abs(closed))
              << static_cast<int>(e.kind) << " " << alpha << " " << t0 << " " << s;
        }
      }
    }
  }
}

TEST(LaplaceNumeric, SubstitutionMatchesWeightedIntegral) {
  const double alpha = 0.6, s = 1.5, t0 = 0.0;
  auto f = fn::shifted_sin(1.0, 0.5);
  // Direct quadrature of e^{-s t^a/a} f(t) t^{a-1} on [0, T] with
  // s T^a / a = 40; the dropped tail is below e^{-40} / s.
  const double T = std::pow(40 * alpha / s, 1 / alpha);
  double direct = oracle::tanh_sinh(
      [&](double t) {
        return std::exp(-s * std::pow(t, alpha) / alpha) * f(t) * std::pow(t, alpha - 1);
      },
      0.0, T, 14);
  EXPECT_NEAR(laplace_numeric(f, {t0, alpha, s, 0.0}), direct, 1e-6);
}

TEST(LaplaceNumeric, OrderOneIsClassical) {
  EXPECT_NEAR(laplace_numeric(fn::shifted_sin(3.0, 0.0), {0, 1.0, 2.0, 0.0}), 3.0 / 13.0, 1e-8);
  EXPECT_NEAR(laplace_numeric(fn::polynomial({0, 0, 1}), {0, 1.0, 2.0, 0.0}), 2.0 / 8.0, 1e-8);
  EXPECT_NEAR(laplace_numeric(fn::exponential(-1.0), {0, 1.0, 1.0, 0.0}), 0.5, 1e-8);
}

TEST(LaplaceOfDeriv, Examples) {
  EXPECT_DOUBLE_EQ(laplace_of_deriv(1.0 / 3.0, 1.0, 3.0), 0.0);
  double lambda = 0.5, s = 2.0;
  double F = 1 / (s - lambda);
  EXPECT_NEAR(laplace_of_deriv(F, 1.0, s), lambda * F, 1e-15);
  EXPECT_DOUBLE_EQ(laplace_of_deriv(0.7, 0.0, 2.0), 1.4);
}

TEST(LaplaceOfDeriv, EndToEndWithNumericDerivative) {
  const double alpha = 0.5, t0 = 0.0, s = 2.0;
  for (const RealFn& f : {fn::shifted_sin(1.0, 0.3), fn::polynomial({1, 0.5, -0.2})}) {
    RealFn d = left_deriv_fn(f, t0, make_order(alpha), DerivBackend::reduction());
    double lhs = laplace_numeric(d, {t0, alpha, s, 0.0});
    double rhs = laplace_of_deriv(laplace_numeric(f, {t0, alpha, s, 0.0}), f(t0), s);
    EXPECT_NEAR(lhs, rhs, 1e-5);
  }
}
