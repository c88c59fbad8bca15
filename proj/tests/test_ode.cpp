#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "conforma/errors.hpp"
#include "conforma/laplace.hpp"
#include "conforma/ode.hpp"

using namespace conforma;

namespace {

// Truncated exponential series, summed long enough for |M| <= 4.
Matrix series_exp(const Matrix& M) {
  Matrix sum = Matrix::Identity(M.rows(), M.cols());
  Matrix term = sum;
  for (int k = 1; k < 80; ++k) {
    term = term * M / k;
    sum += term;
  }
  return sum;
}

}  // namespace

TEST(SolveScalar, Examples) {
  EXPECT_NEAR(solve_scalar(1, 1, 0, 0.5, 1), std::exp(2.0), 1e-14 * std::exp(2.0));
  EXPECT_NEAR(solve_scalar(1, 1, 0, 0.5, 1), 7.3890561, 1e-7);
  EXPECT_DOUBLE_EQ(solve_scalar(-3, 2.5, 1, 0.4, 1), 2.5);
  EXPECT_DOUBLE_EQ(solve_scalar(0, 2.5, 1, 0.4, 7), 2.5);
}

TEST(SolveScalar, SatisfiesTheEquation) {
  const double lambda = -0.7, a = 0.5;
  for (double alpha : {0.3, 0.8}) {
    LinearFracSystem sys{Matrix::Constant(1, 1, lambda), {}, Vector::Constant(1, 2.0), a, alpha};
    VectorFn y = [&](double t) { return Vector::Constant(1, solve_scalar(lambda, 2.0, a, alpha, t)); };
    for (double t : {0.7, 1.5, 2.5}) EXPECT_NEAR(residual(sys, y, t)(0), 0.0, 1e-6);
  }
}

TEST(PicardPartial, Examples) {
  const double l = 1.3, y0 = 0.8, a = 1, alpha = 0.6, t = 2.2;
  double u = std::pow(t - a, alpha) / alpha;
  EXPECT_NEAR(picard_partial(l, y0, a, alpha, 0, t), y0, 1e-15);
  EXPECT_NEAR(picard_partial(l, y0, a, alpha, 1, t), y0 * (1 + l * u), 1e-14);
  double second = y0 * (1 + l * u + l * l * std::pow(t - a, 2 * alpha) / (alpha * 2 * alpha));
  EXPECT_NEAR(picard_partial(l, y0, a, alpha, 2, t), second, 1e-14);
  EXPECT_NEAR(picard_partial(1, 1, 0, 0.5, 30, 1), std::exp(2.0), 1e-13);
}

TEST(PicardPartial, ErrorIsTheTruncatedExponentialTail) {
  // e^x - sum_{k<=25} x^k/k! is bounded by |x|^26/26! max(1, e^x).
  for (double lambda = -2; lambda <= 2; lambda += 0.5) {
    for (double alpha : {0.3, 0.5, 0.8}) {
      for (double d : {0.0, 0.5, 1.0, 2.0}) {
        double x = lambda * std::pow(d, alpha) / alpha;
        double tail = std::exp(26 * std::log(std::abs(x) + 1e-300) - std::lgamma(27.0)) *
                      std::max(1.0, std::exp(x));
        double exact = solve_scalar(lambda, 1.5, 0.0, alpha, d);
        double err = std::abs(picard_partial(lambda, 1.5, 0.0, alpha, 25, d) - exact);
        EXPECT_LE(err, 1.5 * (tail * 1.01 + 1e-15 * std::exp(std::abs(x))));
      }
    }
  }
}

TEST(PicardPartial, MatchesClosedFormWhileTheTailIsSmall) {
  for (double lambda = -2; lambda <= 2; lambda += 0.5) {
    for (double alpha : {0.5, 0.8}) {
      for (double d : {0.0, 0.5, 1.0, 2.0}) {
        double x = lambda * std::pow(d, alpha) / alpha;
        if (x < -3.5) continue;  // relative accuracy is lost to the tail
        double exact = solve_scalar(lambda, 1.5, 0.0, alpha, d);
        EXPECT_NEAR(picard_partial(lambda, 1.5, 0.0, alpha, 25, d), exact, 1e-8 * std::abs(exact));
      }
    }
  }
}

TEST(PicardIterate, LiteralQuadratureMatchesClosedForm) {
  for (double alpha : {0.4, 0.9}) {
    double lit = picard_iterate(0.9, 1.2, 0.5, alpha, 3, 1.8);
    EXPECT_NEAR(lit, picard_partial(0.9, 1.2, 0.5, alpha, 3, 1.8), 1e-6);
  }
}

TEST(FracMatrixExp, Examples) {
  Matrix Z = Matrix::Zero(3, 3);
  EXPECT_TRUE(frac_matrix_exp(Z, 0, 0.5, 2).isIdentity(1e-15));
  Matrix D(2, 2);
  D << 1, 0, 0, -1;
  Matrix E = frac_matrix_exp(D, 0, 0.5, 1);
  EXPECT_NEAR(E(0, 0), std::exp(2.0), 1e-13);
  EXPECT_NEAR(E(1, 1), std::exp(-2.0), 1e-15);
  EXPECT_NEAR(E(0, 1), 0.0, 1e-15);
  EXPECT_TRUE(frac_matrix_exp(D, 1, 0.5, 1).isIdentity(1e-15));
  EXPECT_THROW(frac_matrix_exp(Matrix::Zero(2, 3), 0, 0.5, 1), DomainError);
}

TEST(FracMatrixExp, AgreesWithSeriesAndIsAdditiveInScaledTime) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> entry(-1, 1);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 2 + trial % 3;
    Matrix A = Matrix::NullaryExpr(n, n, [&] { return entry(rng); });
    const double alpha = 0.6;
    Matrix E = frac_matrix_exp(A, 0, alpha, 1.7);
    Matrix S = series_exp(A * std::pow(1.7, alpha) / alpha);
    EXPECT_LT((E - S).cwiseAbs().maxCoeff(), 1e-12);
    auto at = [&](double u) {
      return frac_matrix_exp(A, 0.0, alpha, std::pow(alpha * u, 1 / alpha));
    };
    double u1 = 0.4, u2 = 1.1;
    Matrix lhs = at(u1) * at(u2);
    EXPECT_LT((lhs - at(u1 + u2)).cwiseAbs().maxCoeff(), 1e-10);
  }
}

TEST(SolveSystem, Examples) {
  Matrix A(2, 2);
  A << 0.3, -1, 0.5, -0.2;
  Vector c(2);
  c << 1, -1;
  LinearFracSystem hom{A, {}, c, 0, 0.7};
  Vector y = solve_system(hom, 1.4);
  EXPECT_LT((y - frac_matrix_exp(A, 0, 0.7, 1.4) * c).norm(), 1e-14);
  LinearFracSystem scalar{Matrix::Constant(1, 1, -0.8), {}, Vector::Constant(1, 3.0), 0.5, 0.4};
  EXPECT_NEAR(solve_system(scalar, 2.0)(0), solve_scalar(-0.8, 3.0, 0.5, 0.4, 2.0), 1e-13);
  LinearFracSystem forced{Matrix::Zero(1, 1), [](double) { return Vector::Ones(1); },
                          Vector::Zero(1), 0, 0.5};
  EXPECT_NEAR(solve_system(forced, 1.0)(0), 2.0, 1e-10);
  LinearFracSystem bad{A, {}, Vector::Zero(3), 0, 0.5};
  EXPECT_THROW(solve_system(bad, 1.0), PreconditionError);
  LinearFracSystem past{A, {}, c, 1.0, 0.5};
  EXPECT_THROW(solve_system(past, 0.5), DomainError);
}

TEST(SolveSystem, ResidualVanishesForRandomForcedSystems) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> entry(-1, 1);
  for (int trial = 0; trial < 6; ++trial) {
    int n = 2 + trial % 2;
    Matrix A = Matrix::NullaryExpr(n, n, [&] { return entry(rng); });
    Matrix P = Matrix::NullaryExpr(n, 3, [&] { return entry(rng); });
    Vector c = Vector::NullaryExpr(n, [&] { return entry(rng); });
    double alpha = 0.3 + 0.1 * trial;
    LinearFracSystem sys{A,
                         [P](double t) { return Vector(P.col(0) + t * P.col(1) + t * t * P.col(2)); },
                         c, 0.2, alpha};
    VectorFn y = [&](double t) { return solve_system(sys, t); };
    for (double d : {0.1, 1.0, 2.0}) {
      Vector r = residual(sys, y, sys.a + d);
      EXPECT_LT(r.cwiseAbs().maxCoeff(), 1e-5) << trial << " " << d;
    }
  }
}

TEST(Residual, Examples) {
  Matrix A(2, 2);
  A << 1, 2, -1, 0.5;
  Vector c(2);
  c << 0.3, -0.7;
  Vector f = -A * c;
  LinearFracSystem sys{A, [f](double) { return f; }, c, 0, 0.5};
  VectorFn constant = [c](double) { return c; };
  EXPECT_LT(residual(sys, constant, 1.2).cwiseAbs().maxCoeff(), 1e-12);
  LinearFracSystem scalar{Matrix::Constant(1, 1, 1.0), {}, Vector::Ones(1), 0, 0.5};
  VectorFn wrong = [](double t) { return Vector::Constant(1, solve_scalar(1.5, 1, 0, 0.5, t)); };
  double t = 0.8;
  EXPECT_NEAR(residual(scalar, wrong, t)(0), 0.5 * wrong(t)(0), 1e-6);
  EXPECT_THROW(residual(scalar, wrong, 0.0), DomainError);
}

TEST(LaplaceVerification, ScalarSolutionTransform) {
  for (double lambda : {-1.0, 0.5}) {
    for (double alpha : {0.4, 0.9}) {
      RealFn y([=](double t) { return solve_scalar(lambda, 2.0, 0.0, alpha, t); });
      for (double ds : {0.5, 1.5}) {
        double s = lambda + ds;
        EXPECT_NEAR(laplace_numeric(y, {0.0, alpha, s, lambda}), 2.0 / (s - lambda),
                    1e-6 * 2.0 / (s - lambda));
      }
    }
  }
}

TEST(Gronwall, EqualityFamilyHasZeroSlack) {
  const double delta = 1.5, k = 0.8, alpha = 0.6;
  RealFn r([=](double t) { return delta * std::exp(k * std::pow(t, alpha) / alpha); });
  GronwallInstance g{r, delta, k, 0.0, 2.0, alpha};
  auto rep = gronwall_check(g, 21);
  EXPECT_TRUE(rep.hypothesis_holds);
  EXPECT_FALSE(rep.any_violation);
  for (const auto& p : rep.points) {
    EXPECT_LE(std::abs(p.conclusion_slack), 1e-9);
    EXPECT_LE(std::abs(p.hypothesis_slack), 1e-8 * p.r);
  }
}

TEST(Gronwall, ConstantBelowDelta) {
  GronwallInstance g{fn::constant(0.5), 1.0, 1.0, 0.0, 3.0, 0.5};
  auto rep = gronwall_check(g, 11);
  EXPECT_TRUE(rep.hypothesis_holds);
  for (const auto& p : rep.points) EXPECT_GT(p.conclusion_slack, 0.0);
}

TEST(Gronwall, VacuousWhenHypothesisFails) {
  GronwallInstance g{fn::exponential(3.0), 1.0, 0.5, 0.0, 2.0, 0.8};
  auto rep = gronwall_check(g, 11);
  EXPECT_FALSE(rep.hypothesis_holds);
  EXPECT_FALSE(rep.any_violation);
  EXPECT_LT(rep.min_conclusion_slack, 0.0);
}

TEST(Gronwall, Preconditions) {
  GronwallInstance g{fn::constant(1), 1.0, 1.0, 0.0, 1.0, 0.5};
  EXPECT_THROW(gronwall_check(g, 1), PreconditionError);
  g.k = -1;
  EXPECT_THROW(gronwall_check(g, 5), PreconditionError);
  g.k = 1;
  g.r = fn::constant(-1);
  EXPECT_THROW(gronwall_check(g, 5), PreconditionError);
}

TEST(TrajectoryCsv, FixedFormat) {
  std::ostringstream out;
  write_trajectory_csv(out, {0.0, 0.5}, {Vector::Constant(2, 1.0 / 3), Vector::Constant(2, 2.0)});
  EXPECT_EQ(out.str(), "0,0.333333333333,0.333333333333\n0.5,2,2\n");
  EXPECT_THROW(write_trajectory_csv(out, {0.0}, {}), PreconditionError);
}
