#include "conforma/integ.hpp"

#include <cmath>
#include <string>

#include "conforma/errors.hpp"
#include "conforma/gamma.hpp"

namespace conforma {

namespace {

double factorial(int n) {
  double r = 1.0;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

// Inverse of u = d^beta / beta.
double distance_from_u(double u, double beta) {
  if (beta == 1.0) return u;
  return std::pow(beta * u, 1.0 / beta);
}

// Keeps a node with d > 0 off the anchor when a + d rounds back onto it.
double off_anchor(double anchor, double d, double direction) {
  double x = anchor + direction * d;
  if (x == anchor && d > 0.0) x = std::nextafter(anchor, direction * INFINITY);
  return x;
}

}  // namespace

double left_integral(const RealFn& f, double a, const FracOrder& ord, double t,
                     const QuadratureSpec& spec) {
  if (t < a) throw DomainError("left integral needs t >= a");
  const int n = ord.n;
  const double beta = ord.beta;
  const double upper = std::pow(t - a, beta) / beta;
  const double scale = 1.0 / factorial(n);
  auto integrand = [&](double u) {
    double d = distance_from_u(u, beta);
    double x = off_anchor(a, d, 1.0);
    double kernel = n == 0 ? 1.0 : std::pow((t - a) - d, n);
    return kernel * f(x);
  };
  return scale * integrate(integrand, 0.0, upper, spec).value;
}

double right_integral(const RealFn& f, double b, const FracOrder& ord, double t,
                      const QuadratureSpec& spec) {
  if (t > b) throw DomainError("right integral needs t <= b");
  const int n = ord.n;
  const double beta = ord.beta;
  const double upper = std::pow(b - t, beta) / beta;
  const double scale = 1.0 / factorial(n);
  auto integrand = [&](double u) {
    double d = distance_from_u(u, beta);
    double x = off_anchor(b, d, -1.0);
    double kernel = n == 0 ? 1.0 : std::pow((b - t) - d, n);
    return kernel * f(x);
  };
  return scale * integrate(integrand, 0.0, upper, spec).value;
}

double rl_integral(const RealFn& f, double a, double alpha, double t,
                   const QuadratureSpec& spec) {
  if (!(alpha > 0.0)) throw DomainError("Riemann-Liouville order must be > 0");
  if (t < a) throw DomainError("Riemann-Liouville integral needs t >= a");
  const double upper = std::pow(t - a, alpha) / alpha;
  auto integrand = [&](double u) {
    return f(t - distance_from_u(u, alpha));
  };
  return integrate(integrand, 0.0, upper, spec).value / gamma_fn(alpha);
}

double power_integral_closed(double mu, const FracOrder& ord, double base,
                             Side side, double x) {
  double shifted = ord.alpha + mu - ord.n;
  if (!(shifted > 0.0)) {
    throw DomainError("closed-form power integral needs alpha + mu - n > 0");
  }
  double dist = side == Side::left ? x - base : base - x;
  if (dist < 0.0) {
    throw DomainError("evaluation point lies on the wrong side of the base");
  }
  return gamma_fn(shifted) / gamma_fn(ord.alpha + mu + 1.0) *
         std::pow(dist, ord.alpha + mu);
}

RealFn q_reflect(const RealFn& f, double a, double b) {
  std::vector<ScalarMap> hooks;
  for (std::size_t k = 0; k < f.exact_derivs().size(); ++k) {
    double sign = (k % 2 == 0) ? -1.0 : 1.0;
    ScalarMap d = f.exact_derivs()[k];
    hooks.push_back([d, a, b, sign](double x) { return sign * d(a + b - x); });
  }
  return RealFn([f, a, b](double x) { return f(a + b - x); }, f.smoothness(),
                std::move(hooks));
}

RealFn left_integral_fn(const RealFn& f, double a, const FracOrder& ord,
                        const QuadratureSpec& spec) {
  std::vector<ScalarMap> hooks;
  for (int k = 1; k <= ord.n; ++k) {
    FracOrder lower = make_order(ord.alpha - k);
    hooks.push_back([f, a, lower, spec](double t) {
      return left_integral(f, a, lower, t, spec);
    });
  }
  return RealFn(
      [f, a, ord, spec](double t) { return left_integral(f, a, ord, t, spec); },
      ord.n + 1, std::move(hooks));
}

RealFn right_integral_fn(const RealFn& f, double b, const FracOrder& ord,
                         const QuadratureSpec& spec) {
  std::vector<ScalarMap> hooks;
  for (int k = 1; k <= ord.n; ++k) {
    FracOrder lower = make_order(ord.alpha - k);
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    hooks.push_back([f, b, lower, spec, sign](double t) {
      return sign * right_integral(f, b, lower, t, spec);
    });
  }
  return RealFn(
      [f, b, ord, spec](double t) { return right_integral(f, b, ord, t, spec); },
      ord.n + 1, std::move(hooks));
}

double WeightedIntegral::operator()(const RealFn& f, double t) const {
  return side == Side::left ? left_integral(f, base, ord, t, spec)
                            : right_integral(f, base, ord, t, spec);
}

double semigroup_residual(const RealFn& f, double alpha, double mu, double t,
                          const QuadratureSpec& spec) {
  if (!(alpha > 0.0 && alpha <= 1.0 && mu > 0.0 && mu <= 1.0)) {
    throw DomainError("semigroup identity needs 0 < alpha, mu <= 1");
  }
  if (!(alpha + mu > 1.0 && alpha + mu <= 2.0)) {
    throw DomainError("semigroup identity needs 1 < alpha + mu <= 2");
  }
  if (t < 0.0) throw DomainError("semigroup identity is anchored at 0");
  const FracOrder ord_alpha = make_order(alpha);
  const FracOrder ord_mu = make_order(mu);
  const FracOrder ord_sum = make_order(alpha + mu);
  const FracOrder ord_tail = make_order(alpha + mu - 1.0);

  RealFn inner = left_integral_fn(f, 0.0, ord_alpha, spec);
  double composed = left_integral(inner, 0.0, ord_mu, t, spec);

  double first = std::pow(t, mu) / mu * left_integral(f, 0.0, ord_alpha, t, spec);
  double second = left_integral(f, 0.0, ord_sum, t, spec) / mu;
  // int_0^t s^{alpha+mu-2} f(s) ds is the order-(alpha+mu-1) weighted integral.
  double third = t / mu * left_integral(f, 0.0, ord_tail, t, spec);
  return composed - (first + second - third);
}

double parts_left_residual(const RealFn& f, const RealFn& g, double a, double b,
                           double alpha, const QuadratureSpec& spec,
                           const DerivBackend& backend) {
  FracOrder ord = make_order(alpha);
  RealFn dg = left_deriv_fn(g, a, ord, backend);
  RealFn df = left_deriv_fn(f, a, ord, backend);
  RealFn lhs_integrand([&](double x) { return f(x) * dg(x); });
  RealFn rhs_integrand([&](double x) { return g(x) * df(x); });
  double lhs = left_integral(lhs_integrand, a, ord, b, spec);
  double boundary = f(b) * g(b) - f(a) * g(a);
  double rhs = boundary - left_integral(rhs_integrand, a, ord, b, spec);
  return lhs - rhs;
}

double parts_integral_residual(const RealFn& f, const RealFn& g, double a,
                               double b, double alpha,
                               const QuadratureSpec& spec) {
  FracOrder ord = make_order(alpha);
  RealFn left_f = left_integral_fn(f, a, ord, spec);
  RealFn right_g = right_integral_fn(g, b, ord, spec);
  // d alpha(b, t) carries (b - t)^{alpha-1}: a right integral evaluated at a.
  RealFn lhs_integrand([&](double t) { return left_f(t) * g(t); });
  RealFn rhs_integrand([&](double t) { return f(t) * right_g(t); });
  double lhs = right_integral(lhs_integrand, b, ord, a, spec);
  double rhs = left_integral(rhs_integrand, a, ord, b, spec);
  return lhs - rhs;
}

double parts_derivative_residual(const RealFn& f, const RealFn& g, double a,
                                 double b, double alpha,
                                 const QuadratureSpec& spec,
                                 const DerivBackend& backend) {
  FracOrder ord = make_order(alpha);
  RealFn df = left_deriv_fn(f, a, ord, backend);
  RealFn dg = right_deriv_fn(g, b, ord, backend);
  RealFn lhs_integrand([&](double t) { return df(t) * g(t); });
  RealFn rhs_integrand([&](double t) { return f(t) * dg(t); });
  double lhs = left_integral(lhs_integrand, a, ord, b, spec);
  double rhs = right_integral(rhs_integrand, b, ord, a, spec);
  double boundary = f(b) * g(b) - f(a) * g(a);
  return lhs - rhs - boundary;
}

}  // namespace conforma
