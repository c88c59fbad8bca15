#pragma once

#include <functional>
#include <utility>
#include <vector>

namespace conforma {

using ScalarMap = std::function<double(double)>;

/// A scalar function on an interval together with the smoothness the caller
/// vouches for and, optionally, exact classical derivatives f', f'', ...
///
/// Nothing here checks that `smoothness` is true. Every theorem this library
/// evaluates carries smoothness hypotheses, and meeting them is up to the
/// caller.
class RealFn {
 public:
  RealFn() = default;
  explicit RealFn(ScalarMap eval, int smoothness = 0,
                  std::vector<ScalarMap> exact_derivs = {});

  double operator()(double t) const { return eval_(t); }

  int smoothness() const noexcept { return smoothness_; }
  const std::vector<ScalarMap>& exact_derivs() const noexcept {
    return exact_derivs_;
  }
  bool has_exact_deriv(int order) const noexcept {
    return order >= 1 && order <= static_cast<int>(exact_derivs_.size());
  }

  /// Classical derivative of the given order at t. Uses the exact hook when
  /// one was supplied; otherwise falls back to central differences for
  /// orders 1 and 2. `floor` is a point the stencil must not cross (the base
  /// point of a one-sided operator); pass NaN for no restriction.
  double derivative(int order, double t, double floor, double ceiling) const;
  double derivative(int order, double t) const;

  /// The order-th derivative as a function (hook or numeric fallback). The
  /// fallback stencil respects the same floor/ceiling as derivative().
  RealFn derivative_fn(int order) const;
  RealFn derivative_fn(int order, double floor, double ceiling) const;

 private:
  ScalarMap eval_;
  int smoothness_ = 0;
  std::vector<ScalarMap> exact_derivs_;
};

/// Convenience constructors for the functions used throughout the tests and
/// the CLI builtins.
namespace fn {

RealFn constant(double c);
/// Polynomial with coefficients in ascending powers of (t - shift).
RealFn polynomial(std::vector<double> coeffs, double shift = 0.0);
/// e^{lambda (t-a)^alpha / alpha}
RealFn frac_exp(double lambda, double alpha, double a);
/// sin(omega (t-a)^alpha / alpha) and cos(...)
RealFn frac_sin(double omega, double alpha, double a);
RealFn frac_cos(double omega, double alpha, double a);
/// sin(omega t + phase) with all derivative hooks (first four).
RealFn shifted_sin(double omega, double phase);
/// e^{rate t}
RealFn exponential(double rate);

}  // namespace fn

}  // namespace conforma
