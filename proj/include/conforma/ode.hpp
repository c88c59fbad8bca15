#pragma once

#include <Eigen/Dense>
#include <functional>
#include <iosfwd>
#include <vector>

#include "conforma/diff.hpp"
#include "conforma/quadrature.hpp"
#include "conforma/real_fn.hpp"

namespace conforma {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using VectorFn = std::function<Vector(double)>;

template <>
struct QuadTraits<Vector> {
  static double norm(const Vector& v) { return v.lpNorm<Eigen::Infinity>(); }
  static bool finite(const Vector& v) { return v.allFinite(); }
};

/// T_alpha^a y = A y + f(t), y(a) = c.
struct LinearFracSystem {
  Matrix A;
  VectorFn forcing;  // empty means f = 0
  Vector c;
  double a = 0.0;
  double alpha = 1.0;

  /// PreconditionError on dimension mismatch, DomainError on alpha.
  void validate() const;
};

/// y0 e^{lambda (t-a)^alpha / alpha}.
double solve_scalar(double lambda, double y0, double a, double alpha, double t);

/// n-th successive approximation y0 sum_{k<=n} lambda^k (t-a)^{k alpha} / (alpha^k k!).
double picard_partial(double lambda, double y0, double a, double alpha, int n,
                      double t);

/// The same iterate built literally: y_0 = y0, y_{m+1} = y0 + lambda I_alpha^a y_m,
/// each integral by quadrature (nested `steps` deep).
double picard_iterate(double lambda, double y0, double a, double alpha,
                      int steps, double t, const QuadratureSpec& spec = {});

/// e^{A (t-a)^alpha / alpha} by scaling and squaring with a Pade approximant.
Matrix frac_matrix_exp(const Matrix& A, double a, double alpha, double t);

/// Variation of constants:
///   y(t) = E(t) c + int_a^t E(t) E(s)^{-1} f(s) (s - a)^{alpha-1} ds,
/// with E(t) = e^{A (t-a)^alpha / alpha}. In u = (s-a)^alpha / alpha the
/// integral is int_0^U e^{A (U - u)} f(s(u)) du.
Vector solve_system(const LinearFracSystem& sys, double t,
                    const QuadratureSpec& spec = {});

/// T_alpha^a y(t) - A y(t) - f(t), componentwise, for t > a.
Vector residual(const LinearFracSystem& sys, const VectorFn& y, double t,
                const DerivBackend& backend = {});

/// r(t) <= delta + k int_a^t r(s) (s - a)^{alpha-1} ds on [a, b] implies
/// r(t) <= delta e^{k (t-a)^alpha / alpha}.
struct GronwallInstance {
  RealFn r;
  double delta = 0.0;
  double k = 0.0;
  double a = 0.0;
  double b = 1.0;
  double alpha = 1.0;
};

struct GronwallPoint {
  double t;
  double r;
  double hypothesis_rhs;    // delta + k I_alpha^a r (t)
  double hypothesis_slack;  // hypothesis_rhs - r
  double bound;             // delta e^{k (t-a)^alpha / alpha}
  double conclusion_slack;  // bound - r
  bool hypothesis_holds;    // on every grid point of [a, t]
  bool violation;           // hypothesis held but the bound failed
};

struct GronwallReport {
  std::vector<GronwallPoint> points;
  bool hypothesis_holds = true;
  bool any_violation = false;
  double min_conclusion_slack = 0.0;
};

/// Samples both sides of the inequality on a uniform grid of grid_size
/// points. A point counts as satisfying an inequality when its slack is above
/// minus the quadrature tolerance.
GronwallReport gronwall_check(const GronwallInstance& g, int grid_size,
                              const QuadratureSpec& spec = {});

/// Rows "t,y_1,...,y_n" with 12 significant digits, newline terminated.
void write_trajectory_csv(std::ostream& out, const std::vector<double>& ts,
                          const std::vector<Vector>& ys);

}  // namespace conforma
