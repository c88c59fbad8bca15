#include "conforma/real_fn.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "conforma/errors.hpp"

namespace conforma {

RealFn::RealFn(ScalarMap eval, int smoothness,
               std::vector<ScalarMap> exact_derivs)
    : eval_(std::move(eval)),
      smoothness_(smoothness),
      exact_derivs_(std::move(exact_derivs)) {
  if (smoothness_ < static_cast<int>(exact_derivs_.size())) {
    throw PreconditionError(
        "declared smoothness is lower than the number of derivative hooks");
  }
}

namespace {

// Step for the central-difference fallback, shrunk so the stencil of total
// half-width `reach * h` stays inside (floor, ceiling).
double fallback_step(double t, double reach, double floor, double ceiling) {
  double h = std::max(1e-5, 1e-5 * std::abs(t));
  if (!std::isnan(floor) && t > floor) {
    h = std::min(h, (t - floor) / (2.0 * reach));
  }
  if (!std::isnan(ceiling) && t < ceiling) {
    h = std::min(h, (ceiling - t) / (2.0 * reach));
  }
  return h;
}

}  // namespace

double RealFn::derivative(int order, double t, double floor,
                          double ceiling) const {
  if (order == 0) return eval_(t);
  if (order < 0) throw PreconditionError("negative derivative order");
  if (has_exact_deriv(order)) return exact_derivs_[order - 1](t);
  if (smoothness_ < order) {
    throw PreconditionError("function declared C^" +
                            std::to_string(smoothness_) +
                            " but derivative of order " +
                            std::to_string(order) + " was requested");
  }
  if (order > 2) {
    throw PreconditionError("derivative of order " + std::to_string(order) +
                            " requires an exact hook");
  }
  if (order == 1) {
    double h = fallback_step(t, 1.0, floor, ceiling);
    return (eval_(t + h) - eval_(t - h)) / (2.0 * h);
  }
  // Central difference of the central difference.
  if (has_exact_deriv(1)) {
    double h = fallback_step(t, 1.0, floor, ceiling);
    return (exact_derivs_[0](t + h) - exact_derivs_[0](t - h)) / (2.0 * h);
  }
  double h = fallback_step(t, 2.0, floor, ceiling);
  return (eval_(t + 2.0 * h) - 2.0 * eval_(t) + eval_(t - 2.0 * h)) /
         (4.0 * h * h);
}

double RealFn::derivative(int order, double t) const {
  constexpr double kNone = std::numeric_limits<double>::quiet_NaN();
  return derivative(order, t, kNone, kNone);
}

RealFn RealFn::derivative_fn(int order) const {
  constexpr double kNone = std::numeric_limits<double>::quiet_NaN();
  return derivative_fn(order, kNone, kNone);
}

RealFn RealFn::derivative_fn(int order, double floor, double ceiling) const {
  if (order == 0) return *this;
  std::vector<ScalarMap> hooks;
  for (int k = order + 1; k <= static_cast<int>(exact_derivs_.size()); ++k) {
    hooks.push_back(exact_derivs_[k - 1]);
  }
  RealFn self = *this;
  return RealFn([self, order, floor, ceiling](double t) {
                  return self.derivative(order, t, floor, ceiling);
                },
                std::max(0, smoothness_ - order), std::move(hooks));
}

namespace fn {

RealFn constant(double c) {
  auto zero = [](double) { return 0.0; };
  return RealFn([c](double) { return c; }, 8, {zero, zero, zero, zero});
}

RealFn polynomial(std::vector<double> coeffs, double shift) {
  auto horner = [shift](const std::vector<double>& c, double t) {
    double x = t - shift;
    double acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  auto differentiate = [](const std::vector<double>& c) {
    std::vector<double> d;
    for (std::size_t k = 1; k < c.size(); ++k) d.push_back(c[k] * k);
    return d;
  };
  std::vector<ScalarMap> hooks;
  std::vector<double> d = coeffs;
  for (int k = 0; k < 4; ++k) {
    d = differentiate(d);
    hooks.push_back([horner, d](double t) { return horner(d, t); });
  }
  return RealFn([horner, coeffs](double t) { return horner(coeffs, t); }, 8,
                std::move(hooks));
}

RealFn frac_exp(double lambda, double alpha, double a) {
  auto value = [=](double t) {
    return std::exp(lambda * std::pow(t - a, alpha) / alpha);
  };
  auto d1 = [=](double t) {
    return lambda * std::pow(t - a, alpha - 1.0) * value(t);
  };
  return RealFn(value, 1, {d1});
}

RealFn frac_sin(double omega, double alpha, double a) {
  auto value = [=](double t) {
    return std::sin(omega * std::pow(t - a, alpha) / alpha);
  };
  auto d1 = [=](double t) {
    return omega * std::pow(t - a, alpha - 1.0) *
           std::cos(omega * std::pow(t - a, alpha) / alpha);
  };
  return RealFn(value, 1, {d1});
}

RealFn frac_cos(double omega, double alpha, double a) {
  auto value = [=](double t) {
    return std::cos(omega * std::pow(t - a, alpha) / alpha);
  };
  auto d1 = [=](double t) {
    return -omega * std::pow(t - a, alpha - 1.0) *
           std::sin(omega * std::pow(t - a, alpha) / alpha);
  };
  return RealFn(value, 1, {d1});
}

RealFn shifted_sin(double omega, double phase) {
  auto s = [=](double t) { return std::sin(omega * t + phase); };
  auto c = [=](double t) { return std::cos(omega * t + phase); };
  return RealFn(s, 8,
                {[=](double t) { return omega * c(t); },
                 [=](double t) { return -omega * omega * s(t); },
                 [=](double t) { return -omega * omega * omega * c(t); },
                 [=](double t) { return omega * omega * omega * omega * s(t); }});
}

RealFn exponential(double rate) {
  auto e = [=](double t) { return std::exp(rate * t); };
  return RealFn(e, 8,
                {[=](double t) { return rate * e(t); },
                 [=](double t) { return rate * rate * e(t); },
                 [=](double t) { return rate * rate * rate * e(t); },
                 [=](double t) { return rate * rate * rate * rate * e(t); }});
}

}  // namespace fn

}  // namespace conforma
