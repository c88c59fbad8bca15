#pragma once

// Reference computations that share no code with the library: tanh-sinh
// quadrature, std::tgamma, and closed forms written out by hand.

#include <cmath>
#include <functional>
#include <numbers>

namespace oracle {

/// Double-exponential quadrature on [lo, hi]. The integrand is never sampled
/// at the ends, so integrable endpoint singularities are fine as long as
/// points next to them are representable (put them at 0).
inline double tanh_sinh(const std::function<double(double)>& f, double lo,
                        double hi, int levels = 9) {
  if (lo == hi) return 0.0;
  const double c = 0.5 * (hi - lo);
  const double m = 0.5 * (hi + lo);
  double h = 1.0;
  double sum = 0.0;
  auto term = [&](double x) {
    double s = std::sinh(x);
    double ch = std::cosh(x);
    double u = std::numbers::pi / 2 * s;
    double w = std::numbers::pi / 2 * ch / (std::cosh(u) * std::cosh(u));
    double total = 0.0;
    // Distances from the ends computed without cancellation.
    double gap = c / (std::exp(u) * std::cosh(u));  // c (1 - tanh u)
    if (!(w > 0.0)) return 0.0;
    if (hi - gap < hi) total += w * f(hi - gap);
    if (x != 0.0 && lo + gap > lo) total += w * f(lo + gap);
    return total;
  };
  for (int k = 0; k * h <= 6.0; ++k) sum += term(k * h);
  double result = c * h * sum;
  for (int level = 1; level <= levels; ++level) {
    h *= 0.5;
    double extra = 0.0;
    for (int k = 1; k * h <= 6.0; k += 2) extra += term(k * h);
    sum += extra;
    double next = c * h * sum;
    if (level > 4 && std::abs(next - result) <= 1e-15 * std::abs(next)) {
      return next;
    }
    result = next;
  }
  return result;
}

inline double gamma(double x) { return std::tgamma(x); }

}  // namespace oracle
