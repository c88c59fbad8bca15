#include "conforma/diff.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "conforma/errors.hpp"

namespace conforma {

namespace {

constexpr double kNone = std::numeric_limits<double>::quiet_NaN();

void require_unit_order(const FracOrder& ord) {
  if (ord.n != 0) {
    throw PreconditionError("first-stage derivative needs 0 < alpha <= 1");
  }
}

void require_alpha_in_unit(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("alpha must lie in (0, 1], got " + std::to_string(alpha));
  }
}

// Interior evaluation of the unsigned quotient lim (f(t + eps w) - f(t)) / eps
// with w = dist^{1-alpha}, dist = distance from t to the base point.
double interior_quotient(const RealFn& f, double dist, double alpha, double t,
                         const DerivBackend& backend, double floor,
                         double ceiling) {
  double w = std::pow(dist, 1.0 - alpha);
  if (backend.mode == DerivBackend::Mode::reduction_formula) {
    return w * f.derivative(1, t, floor, ceiling);
  }
  // Keep the stencil within half the distance to the base point.
  double eps0 = std::min(backend.step0, 0.5 * dist / w);
  ScalarMap g = [&f](double x) { return f(x); };
  return extrapolated_quotient(g, t, w, eps0, backend.richardson_levels).value;
}

}  // namespace

void DerivBackend::validate() const {
  if (!(step0 > 0.0 && step0 < 1.0)) {
    throw PreconditionError("step0 must lie in (0, 1)");
  }
  if (richardson_levels < 1 || richardson_levels > 8) {
    throw PreconditionError("richardson_levels must lie in [1, 8]");
  }
}

LimitEstimate extrapolated_quotient(const ScalarMap& g, double t, double w,
                                    double eps0, int levels) {
  std::vector<std::vector<double>> table(levels + 1);
  LimitEstimate best{0.0, std::numeric_limits<double>::infinity()};
  double eps = eps0;
  for (int k = 0; k <= levels; ++k, eps *= 0.5) {
    double h = eps * w;
    table[k].push_back((g(t + h) - g(t - h)) / (2.0 * eps));
    if (k == 0) {
      best.value = table[0][0];
      continue;
    }
    double factor = 4.0;
    for (int j = 1; j <= k; ++j, factor *= 4.0) {
      double next = table[k][j - 1] +
                    (table[k][j - 1] - table[k - 1][j - 1]) / (factor - 1.0);
      table[k].push_back(next);
      double err = std::max(std::abs(next - table[k][j - 1]),
                            std::abs(next - table[k - 1][j - 1]));
      if (err <= best.error) {
        best = LimitEstimate{next, err};
      }
    }
    if (std::abs(table[k][k] - table[k - 1][k - 1]) >= 2.0 * best.error) {
      break;
    }
  }
  return best;
}

double endpoint_limit(const ScalarMap& g, double base, double direction,
                      double h0, double rel_tol) {
  constexpr int kSamples = 17;
  std::vector<double> x(kSamples);
  double h = h0;
  double magnitude = 0.0;
  for (int k = 0; k < kSamples; ++k, h *= 0.5) {
    x[k] = g(base + direction * h);
    if (!std::isfinite(x[k])) {
      throw ConvergenceError("endpoint limit: non-finite sample at distance " +
                             std::to_string(h));
    }
    magnitude = std::max(magnitude, std::abs(x[k]));
  }
  double noise = 1e-12 * (1.0 + magnitude);

  // Differences that keep growing mean there is no finite limit.
  double d_last = std::abs(x[kSamples - 1] - x[kSamples - 2]);
  double d_earlier = std::abs(x[kSamples - 4] - x[kSamples - 5]);
  if (d_last > noise && d_last >= d_earlier) {
    throw ConvergenceError("endpoint limit: samples do not settle near the "
                           "base point");
  }

  auto aitken = [](const std::vector<double>& s) {
    std::vector<double> out;
    for (std::size_t k = 0; k + 2 < s.size(); ++k) {
      double d0 = s[k + 1] - s[k];
      double d1 = s[k + 2] - s[k + 1];
      double denom = d1 - d0;
      out.push_back(denom == 0.0 ? s[k + 2] : s[k + 2] - d1 * d1 / denom);
    }
    return out;
  };

  double best_value = x.back();
  double best_gap = std::abs(x[kSamples - 1] - x[kSamples - 2]);
  std::vector<double> seq = x;
  for (int level = 1; level <= 3; ++level) {
    seq = aitken(seq);
    if (seq.size() < 2) break;
    double gap = std::abs(seq[seq.size() - 1] - seq[seq.size() - 2]);
    if (gap < best_gap) {
      best_gap = gap;
      best_value = seq.back();
    }
  }
  if (best_gap > rel_tol * (1.0 + std::abs(best_value))) {
    throw ConvergenceError("endpoint limit: extrapolants disagree by " +
                           std::to_string(best_gap));
  }
  return best_value;
}

double left_deriv(const RealFn& f, double a, const FracOrder& ord, double t,
                  const DerivBackend& backend) {
  require_unit_order(ord);
  backend.validate();
  if (t < a) throw DomainError("left derivative needs t >= a");
  if (t == a) {
    return endpoint_limit(
        [&](double s) { return left_deriv(f, a, ord, s, backend); }, a, 1.0);
  }
  return interior_quotient(f, t - a, ord.alpha, t, backend, a, kNone);
}

double right_deriv(const RealFn& f, double b, const FracOrder& ord, double t,
                   const DerivBackend& backend) {
  require_unit_order(ord);
  backend.validate();
  if (t > b) throw DomainError("right derivative needs t <= b");
  if (t == b) {
    return endpoint_limit(
        [&](double s) { return right_deriv(f, b, ord, s, backend); }, b, -1.0);
  }
  return -interior_quotient(f, b - t, ord.alpha, t, backend, kNone, b);
}

double higher_left_deriv(const RealFn& f, double a, const FracOrder& ord,
                         double t, const DerivBackend& backend) {
  if (ord.n == 0) return left_deriv(f, a, ord, t, backend);
  if (f.smoothness() < ord.n) {
    throw PreconditionError("order " + std::to_string(ord.alpha) +
                            " needs a C^" + std::to_string(ord.n) + " function");
  }
  RealFn inner = f.derivative_fn(ord.n, a, kNone);
  return left_deriv(inner, a, make_order(ord.beta), t, backend);
}

double higher_right_deriv(const RealFn& f, double b, const FracOrder& ord,
                          double t, const DerivBackend& backend) {
  if (ord.n == 0) return right_deriv(f, b, ord, t, backend);
  if (f.smoothness() < ord.n) {
    throw PreconditionError("order " + std::to_string(ord.alpha) +
                            " needs a C^" + std::to_string(ord.n) + " function");
  }
  RealFn inner = f.derivative_fn(ord.n, kNone, b);
  double sign = (ord.n % 2 == 0) ? 1.0 : -1.0;
  return sign * right_deriv(inner, b, make_order(ord.beta), t, backend);
}

namespace {

// C_{count, j} for j = 1..count (index 0 unused).
std::vector<double> sequential_coefficients(double alpha, int count) {
  std::vector<double> c(count + 2, 0.0);
  c[1] = 1.0;
  for (int m = 1; m < count; ++m) {
    std::vector<double> next(count + 2, 0.0);
    for (int j = 1; j <= m; ++j) {
      next[j] += c[j] * (j - m * alpha);
      next[j + 1] += c[j];
    }
    c = std::move(next);
  }
  return c;
}

void check_sequential(const RealFn& f, double alpha, int count) {
  require_alpha_in_unit(alpha);
  if (count < 1) throw PreconditionError("count must be at least 1");
  if (f.smoothness() < count) {
    throw PreconditionError("sequential derivative of count " +
                            std::to_string(count) + " needs a C^" +
                            std::to_string(count) + " function");
  }
}

}  // namespace

double sequential_left_deriv(const RealFn& f, double a, double alpha,
                             int count, double t) {
  check_sequential(f, alpha, count);
  if (t < a) throw DomainError("left derivative needs t >= a");
  if (t == a) {
    return endpoint_limit(
        [&](double s) { return sequential_left_deriv(f, a, alpha, count, s); },
        a, 1.0);
  }
  auto c = sequential_coefficients(alpha, count);
  double x = t - a;
  double sum = 0.0;
  for (int j = 1; j <= count; ++j) {
    sum += c[j] * std::pow(x, j - count * alpha) * f.derivative(j, t, a, kNone);
  }
  return sum;
}

double sequential_right_deriv(const RealFn& f, double b, double alpha,
                              int count, double t) {
  check_sequential(f, alpha, count);
  if (t > b) throw DomainError("right derivative needs t <= b");
  if (t == b) {
    return endpoint_limit(
        [&](double s) { return sequential_right_deriv(f, b, alpha, count, s); },
        b, -1.0);
  }
  auto c = sequential_coefficients(alpha, count);
  double x = b - t;
  double sum = 0.0;
  for (int j = 1; j <= count; ++j) {
    double sign = (j % 2 == 0) ? 1.0 : -1.0;
    sum += c[j] * std::pow(x, j - count * alpha) * sign *
           f.derivative(j, t, kNone, b);
  }
  return sum;
}

double chain_deriv(const RealFn& f, const RealFn& g, double a, double alpha,
                   double t, const DerivBackend& backend) {
  require_alpha_in_unit(alpha);
  backend.validate();
  if (t < a) throw DomainError("chain rule needs t >= a");
  if (t == a) {
    return endpoint_limit(
        [&](double s) { return chain_deriv(f, g, a, alpha, s, backend); }, a,
        1.0);
  }
  FracOrder ord = make_order(alpha);
  double gt = g(t);
  double outer;
  if (alpha == 1.0) {
    // Classical chain rule; the outer derivative is not anchored at a.
    if (backend.mode == DerivBackend::Mode::reduction_formula) {
      outer = f.derivative(1, gt);
    } else {
      ScalarMap fm = [&f](double x) { return f(x); };
      outer = extrapolated_quotient(fm, gt, 1.0, backend.step0,
                                    backend.richardson_levels)
                  .value;
    }
    return outer * left_deriv(g, a, ord, t, backend);
  }
  if (gt == a) {
    throw SingularityError("chain rule: g(t) equals the base point");
  }
  if (gt < a) {
    throw DomainError("chain rule: g(t) lies left of the base point");
  }
  outer = left_deriv(f, a, ord, gt, backend);
  return outer * left_deriv(g, a, ord, t, backend) *
         std::pow(gt - a, alpha - 1.0);
}

RealFn left_deriv_fn(const RealFn& f, double a, const FracOrder& ord,
                     const DerivBackend& backend) {
  return RealFn(
      [f, a, ord, backend](double t) {
        return higher_left_deriv(f, a, ord, t, backend);
      },
      std::max(0, f.smoothness() - ord.n - 1));
}

RealFn right_deriv_fn(const RealFn& f, double b, const FracOrder& ord,
                      const DerivBackend& backend) {
  return RealFn(
      [f, b, ord, backend](double t) {
        return higher_right_deriv(f, b, ord, t, backend);
      },
      std::max(0, f.smoothness() - ord.n - 1));
}

}  // namespace conforma
