#include "conforma/ode.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>

#include "conforma/errors.hpp"
#include "conforma/integ.hpp"

namespace conforma {

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("system order must lie in (0, 1]");
  }
}

double scaled_time(double a, double alpha, double t) {
  if (t < a) throw DomainError("solution requested before the base point");
  return std::pow(t - a, alpha) / alpha;
}

}  // namespace

void LinearFracSystem::validate() const {
  require_alpha(alpha);
  if (A.rows() != A.cols()) throw DomainError("system matrix must be square");
  if (c.size() != A.rows()) {
    throw PreconditionError("initial vector and matrix dimensions differ");
  }
}

double solve_scalar(double lambda, double y0, double a, double alpha,
                    double t) {
  require_alpha(alpha);
  return y0 * std::exp(lambda * scaled_time(a, alpha, t));
}

double picard_partial(double lambda, double y0, double a, double alpha, int n,
                      double t) {
  require_alpha(alpha);
  if (n < 0) throw DomainError("iterate index must be non-negative");
  double x = lambda * scaled_time(a, alpha, t);
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k <= n; ++k) {
    term *= x / k;
    sum += term;
  }
  return y0 * sum;
}

double picard_iterate(double lambda, double y0, double a, double alpha,
                      int steps, double t, const QuadratureSpec& spec) {
  require_alpha(alpha);
  if (steps < 0) throw DomainError("iterate index must be non-negative");
  const FracOrder ord = make_order(alpha);
  RealFn current = fn::constant(y0);
  for (int m = 0; m < steps; ++m) {
    RealFn previous = current;
    current = RealFn([previous, lambda, y0, a, ord, spec](double x) {
      return y0 + lambda * left_integral(previous, a, ord, x, spec);
    });
  }
  return current(t);
}

Matrix frac_matrix_exp(const Matrix& A, double a, double alpha, double t) {
  require_alpha(alpha);
  if (A.rows() != A.cols()) throw DomainError("matrix must be square");
  Matrix scaled = A * scaled_time(a, alpha, t);
  return scaled.exp();
}

Vector solve_system(const LinearFracSystem& sys, double t,
                    const QuadratureSpec& spec) {
  sys.validate();
  double U = scaled_time(sys.a, sys.alpha, t);
  Vector y = (sys.A * U).exp() * sys.c;
  if (!sys.forcing) return y;
  const double inv_alpha = 1.0 / sys.alpha;
  auto integrand = [&](double u) -> Vector {
    double s = sys.a + std::pow(sys.alpha * u, inv_alpha);
    Vector f = sys.forcing(s);
    if (f.size() != sys.A.rows()) {
      throw PreconditionError("forcing has the wrong dimension");
    }
    return (sys.A * (U - u)).exp() * f;
  };
  return y + integrate<Vector>(integrand, 0.0, U, spec).value;
}

Vector residual(const LinearFracSystem& sys, const VectorFn& y, double t,
                const DerivBackend& backend) {
  sys.validate();
  if (!(t > sys.a)) throw DomainError("residual needs t > a");
  // Every component's quotient samples the same points; evaluate y once.
  std::map<double, Vector> memo;
  auto sample = [&](double x) -> const Vector& {
    auto it = memo.find(x);
    if (it == memo.end()) it = memo.emplace(x, y(x)).first;
    return it->second;
  };
  const Eigen::Index n = sys.A.rows();
  const FracOrder ord = make_order(sys.alpha);
  Vector dy(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    RealFn component([&sample, i](double x) { return sample(x)(i); }, 1);
    dy(i) = left_deriv(component, sys.a, ord, t, backend);
  }
  Vector rhs = sys.A * sample(t);
  if (sys.forcing) rhs += sys.forcing(t);
  return dy - rhs;
}

GronwallReport gronwall_check(const GronwallInstance& g, int grid_size,
                              const QuadratureSpec& spec) {
  require_alpha(g.alpha);
  if (grid_size < 2) throw PreconditionError("grid_size must be at least 2");
  if (g.delta < 0.0 || g.k < 0.0) {
    throw PreconditionError("delta and k must be non-negative");
  }
  if (!(g.b > g.a)) throw DomainError("Gronwall interval needs a < b");
  const FracOrder ord = make_order(g.alpha);
  GronwallReport report;
  report.min_conclusion_slack = std::numeric_limits<double>::infinity();
  bool held_so_far = true;
  for (int i = 0; i < grid_size; ++i) {
    double t = g.a + (g.b - g.a) * i / (grid_size - 1);
    if (i == grid_size - 1) t = g.b;
    GronwallPoint p{};
    p.t = t;
    p.r = g.r(t);
    if (p.r < 0.0) throw PreconditionError("r must be non-negative");
    p.hypothesis_rhs = g.delta + g.k * left_integral(g.r, g.a, ord, t, spec);
    p.hypothesis_slack = p.hypothesis_rhs - p.r;
    p.bound = g.delta * std::exp(g.k * std::pow(t - g.a, g.alpha) / g.alpha);
    p.conclusion_slack = p.bound - p.r;
    double tol = 10.0 * (spec.abs_tol + spec.rel_tol * std::abs(p.hypothesis_rhs));
    held_so_far = held_so_far && p.hypothesis_slack >= -tol;
    p.hypothesis_holds = held_so_far;
    double bound_tol = 10.0 * (spec.abs_tol + spec.rel_tol * std::abs(p.bound));
    p.violation = held_so_far && p.conclusion_slack < -bound_tol;
    report.hypothesis_holds = report.hypothesis_holds && p.hypothesis_holds;
    report.any_violation = report.any_violation || p.violation;
    report.min_conclusion_slack =
        std::min(report.min_conclusion_slack, p.conclusion_slack);
    report.points.push_back(p);
  }
  return report;
}

void write_trajectory_csv(std::ostream& out, const std::vector<double>& ts,
                          const std::vector<Vector>& ys) {
  if (ts.size() != ys.size()) {
    throw PreconditionError("trajectory times and values differ in length");
  }
  char buf[32];
  for (std::size_t i = 0; i < ts.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.12g", ts[i]);
    out << buf;
    for (Eigen::Index j = 0; j < ys[i].size(); ++j) {
      std::snprintf(buf, sizeof buf, "%.12g", ys[i](j));
      out << ',' << buf;
    }
    out << '\n';
  }
}

}  // namespace conforma
