#pragma once

#include "conforma/order.hpp"
#include "conforma/real_fn.hpp"

namespace conforma {

/// How a first-stage conformable derivative T_alpha f(t) is evaluated.
///
/// limit_quotient evaluates the defining quotient
///   (f(t + eps w) - f(t - eps w)) / (2 eps),  w = (t - a)^{1 - alpha}
/// on eps = step0 * 2^{-k}, k = 0..richardson_levels, and Richardson
/// extrapolates the table. reduction_formula uses (t - a)^{1-alpha} f'(t)
/// with f' from the exact hook or central differences.
struct DerivBackend {
  enum class Mode { limit_quotient, reduction_formula };

  Mode mode = Mode::limit_quotient;
  double step0 = 0.1;
  int richardson_levels = 6;

  void validate() const;

  static DerivBackend limit(double step0 = 0.1, int levels = 6) {
    return DerivBackend{Mode::limit_quotient, step0, levels};
  }
  static DerivBackend reduction() {
    return DerivBackend{Mode::reduction_formula, 0.1, 6};
  }
};

struct LimitEstimate {
  double value;
  double error;
};

/// Richardson-extrapolated central quotient
///   lim (g(t + eps w) - g(t - eps w)) / (2 eps)
/// over eps = eps0 * 2^{-k}. Stops early once the table starts to diverge
/// (roundoff dominates), returning the entry with the smallest error.
LimitEstimate extrapolated_quotient(const ScalarMap& g, double t, double w,
                                    double eps0, int levels);

/// One-sided limit lim_{h -> 0+} g(base + direction * h), sampled on a
/// geometric sequence h_k = h0 2^{-k} and accelerated with iterated Aitken
/// extrapolation. Throws ConvergenceError when the samples diverge or the
/// extrapolants disagree by more than rel_tol (1 + |limit|).
double endpoint_limit(const ScalarMap& g, double base, double direction,
                      double h0 = 0.125, double rel_tol = 1e-6);

/// Left conformable derivative T_alpha^a f(t), 0 < alpha <= 1 (ord.n == 0).
/// At t == a returns the right limit. Throws DomainError for t < a.
double left_deriv(const RealFn& f, double a, const FracOrder& ord, double t,
                  const DerivBackend& backend = {});

/// Right conformable derivative, -(b - t)^{1-alpha} f'(t) for differentiable
/// f; the left limit at t == b. Throws DomainError for t > b.
double right_deriv(const RealFn& f, double b, const FracOrder& ord, double t,
                   const DerivBackend& backend = {});

/// Left derivative of any order: T_beta^a applied to f^{(n)}.
double higher_left_deriv(const RealFn& f, double a, const FracOrder& ord,
                         double t, const DerivBackend& backend = {});

/// Right derivative of any order: (-1)^{n+1} (b - t)^{1-beta} f^{(n+1)}(t),
/// i.e. (-1)^n times the right derivative of order beta of f^{(n)}. This is
/// the sign that reduces to the first-order operator at n = 0 and makes the
/// right integral its inverse.
double higher_right_deriv(const RealFn& f, double b, const FracOrder& ord,
                          double t, const DerivBackend& backend = {});

/// T_alpha^a applied `count` times, alpha in (0, 1]. For t > a this is
///   sum_j C_{count,j} (t - a)^{j - count alpha} f^{(j)}(t)
/// with C built by the recursion T[(t-a)^e g] = e (t-a)^{e-alpha} g +
/// (t-a)^{e+1-alpha} g'. At t == a the right limit.
double sequential_left_deriv(const RealFn& f, double a, double alpha,
                             int count, double t);

/// Right-sided counterpart: sum_j C_{count,j} (b - t)^{j - count alpha}
/// (-1)^j f^{(j)}(t).
double sequential_right_deriv(const RealFn& f, double b, double alpha,
                              int count, double t);

/// Chain-rule evaluation of T_alpha^a (f o g)(t):
///   (T_alpha^a f)(g(t)) (T_alpha^a g)(t) (g(t) - a)^{alpha - 1}.
/// With a = 0 this is the familiar g(t)^{alpha-1} form. For alpha < 1,
/// g(t) == a is a SingularityError and g(t) < a a DomainError.
double chain_deriv(const RealFn& f, const RealFn& g, double a, double alpha,
                   double t, const DerivBackend& backend = {});

/// t -> T_alpha^a f(t) (any order) as a function, for composing operators.
RealFn left_deriv_fn(const RealFn& f, double a, const FracOrder& ord,
                     const DerivBackend& backend = {});
RealFn right_deriv_fn(const RealFn& f, double b, const FracOrder& ord,
                      const DerivBackend& backend = {});

}  // namespace conforma
