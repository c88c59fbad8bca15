#pragma once

#include "conforma/diff.hpp"
#include "conforma/order.hpp"
#include "conforma/quadrature.hpp"
#include "conforma/real_fn.hpp"

namespace conforma {

/// Left conformable integral of order alpha = n + beta:
///   (1/n!) int_a^t (t - x)^n (x - a)^{beta - 1} f(x) dx.
/// The weight is absorbed by u = (x - a)^beta / beta before quadrature, so
/// the integrand in u is continuous for continuous f.
double left_integral(const RealFn& f, double a, const FracOrder& ord, double t,
                     const QuadratureSpec& spec = {});

/// Right conformable integral:
///   (1/n!) int_t^b (x - t)^n (b - x)^{beta - 1} f(x) dx.
double right_integral(const RealFn& f, double b, const FracOrder& ord, double t,
                      const QuadratureSpec& spec = {});

/// Riemann-Liouville integral (1/Gamma(alpha)) int_a^t (t - s)^{alpha-1} f(s) ds.
double rl_integral(const RealFn& f, double a, double alpha, double t,
                   const QuadratureSpec& spec = {});

/// Closed form of the conformable integral of (t - a)^mu (left) or
/// (b - t)^mu (right), evaluated at x:
///   Gamma(alpha + mu - n) / Gamma(alpha + mu + 1) |x - base|^{alpha + mu}.
/// Requires alpha + mu - n > 0.
double power_integral_closed(double mu, const FracOrder& ord, double base,
                             Side side, double x);

/// x -> f(a + b - x). Derivative hooks are carried over with their signs.
RealFn q_reflect(const RealFn& f, double a, double b);

/// The integral as a function of t. For n >= 1 the classical derivatives of
/// orders 1..n are attached as hooks: d^k/dt^k of the order-alpha integral
/// is the order-(alpha - k) integral (negated k times on the right side).
RealFn left_integral_fn(const RealFn& f, double a, const FracOrder& ord,
                        const QuadratureSpec& spec = {});
RealFn right_integral_fn(const RealFn& f, double b, const FracOrder& ord,
                         const QuadratureSpec& spec = {});

/// A conformable integral with its anchor, side and order fixed.
struct WeightedIntegral {
  double base;
  Side side;
  FracOrder ord;
  QuadratureSpec spec;

  double operator()(const RealFn& f, double t) const;
};

/// (I_mu I_alpha f)(t) minus
///   (t^mu / mu)(I_alpha f)(t) + (1/mu)(I_{alpha+mu} f)(t)
///     - (t / mu) int_0^t s^{alpha+mu-2} f(s) ds,
/// all anchored at 0 and each term by its own quadrature. The inner operator
/// is I_alpha. Needs 0 < alpha, mu <= 1 and 1 < alpha + mu <= 2.
double semigroup_residual(const RealFn& f, double alpha, double mu, double t,
                          const QuadratureSpec& spec = {});

/// Integration by parts with left derivatives and the left measure:
///   int_a^b f T_alpha^a g dalpha(x,a) - [ fg |_a^b - int_a^b g T_alpha^a f dalpha(x,a) ].
double parts_left_residual(const RealFn& f, const RealFn& g, double a, double b,
                           double alpha, const QuadratureSpec& spec = {},
                           const DerivBackend& backend = {});

/// Mixed left/right integrals:
///   int_a^b (I_alpha^a f) g dalpha(b,t) - int_a^b f (^bI_alpha g) dalpha(t,a).
double parts_integral_residual(const RealFn& f, const RealFn& g, double a,
                               double b, double alpha,
                               const QuadratureSpec& spec = {});

/// Mixed left/right derivatives:
///   int_a^b (T_alpha^a f) g dalpha(t,a) - int_a^b f (^bT_alpha g) dalpha(b,t)
///     - fg |_a^b.
double parts_derivative_residual(const RealFn& f, const RealFn& g, double a,
                                 double b, double alpha,
                                 const QuadratureSpec& spec = {},
                                 const DerivBackend& backend = {});

}  // namespace conforma
