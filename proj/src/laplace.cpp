#include "conforma/laplace.hpp"

#include <cmath>
#include <string>

#include "conforma/errors.hpp"
#include "conforma/gamma.hpp"

namespace conforma {

double laplace_numeric(const RealFn& f, const TransformQuery& q,
                       const QuadratureSpec& spec) {
  if (!(q.alpha > 0.0 && q.alpha <= 1.0)) {
    throw DomainError("transform order must lie in (0, 1]");
  }
  if (!(q.s > q.tail_bound)) {
    throw DivergenceError("transform diverges: s = " + std::to_string(q.s) +
                          " is not above the growth bound " +
                          std::to_string(q.tail_bound));
  }
  const double inv_alpha = 1.0 / q.alpha;
  auto integrand = [&](double u) {
    return std::exp(-q.s * u) * f(q.t0 + std::pow(q.alpha * u, inv_alpha));
  };
  const double panel = 5.0 / (q.s - q.tail_bound);
  constexpr int kMaxPanels = 4000;

  double total = 0.0;
  double prev_value = 0.0;
  double prev_mag = 0.0;
  for (int k = 0; k < kMaxPanels; ++k) {
    auto r = integrate(integrand, k * panel, (k + 1) * panel, spec);
    total += r.value;
    double cutoff = std::max(spec.abs_tol, 1e-2 * spec.rel_tol * std::abs(total));
    // Stop once two consecutive panels are negligible and shrinking.
    if (k > 0 && r.magnitude < cutoff && r.magnitude <= prev_mag) {
      double ratio = prev_value != 0.0 ? r.value / prev_value : 0.0;
      if (std::abs(ratio) < 1.0) total += r.value * ratio / (1.0 - ratio);
      return total;
    }
    prev_value = r.value;
    prev_mag = r.magnitude;
  }
  throw AccuracyError("transform tail did not decay within the panel budget",
                      total, prev_mag);
}

double region_boundary(const TableEntry& entry) {
  switch (entry.kind) {
    case TableKind::one:
    case TableKind::t:
    case TableKind::t_pow:
    case TableKind::frac_sin:
    case TableKind::frac_cos:
      return 0.0;
    case TableKind::frac_exp:
      return entry.param;
    case TableKind::damped: {
      if (entry.inner_kind == TableKind::damped) {
        throw DomainError("damped entries cannot nest");
      }
      TableEntry inner{entry.inner_kind, entry.inner_param, TableKind::one, 0.0};
      return region_boundary(inner) - entry.param;
    }
  }
  return 0.0;
}

double laplace_table(const TableEntry& entry, double t0, double alpha,
                     double s) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("transform order must lie in (0, 1]");
  }
  if (!(s > region_boundary(entry))) {
    throw DomainError("s = " + std::to_string(s) +
                      " is outside the region of convergence");
  }
  switch (entry.kind) {
    case TableKind::one:
      return 1.0 / s;
    case TableKind::t:
      return t0 / s + std::pow(alpha, 1.0 / alpha) * gamma_fn(1.0 + 1.0 / alpha) /
                          std::pow(s, 1.0 + 1.0 / alpha);
    case TableKind::t_pow: {
      double p = entry.param;
      if (t0 != 0.0) throw DomainError("t_pow entry is anchored at t0 = 0");
      if (!(p > -alpha)) throw DomainError("t_pow entry needs p > -alpha");
      return std::pow(alpha, p / alpha) * gamma_fn(1.0 + p / alpha) /
             std::pow(s, 1.0 + p / alpha);
    }
    case TableKind::frac_exp:
      return 1.0 / (s - entry.param);
    case TableKind::frac_sin: {
      double w = entry.param;
      return w / (s * s + w * w);
    }
    case TableKind::frac_cos: {
      double w = entry.param;
      return s / (s * s + w * w);
    }
    case TableKind::damped: {
      TableEntry inner{entry.inner_kind, entry.inner_param, TableKind::one, 0.0};
      return laplace_table(inner, t0, alpha, s + entry.param);
    }
  }
  return 0.0;
}

RealFn table_function(const TableEntry& entry, double t0, double alpha) {
  switch (entry.kind) {
    case TableKind::one:
      return fn::constant(1.0);
    case TableKind::t:
      return fn::polynomial({0.0, 1.0});
    case TableKind::t_pow: {
      double p = entry.param;
      return RealFn([p](double t) { return std::pow(t, p); });
    }
    case TableKind::frac_exp:
      return fn::frac_exp(entry.param, alpha, t0);
    case TableKind::frac_sin:
      return fn::frac_sin(entry.param, alpha, t0);
    case TableKind::frac_cos:
      return fn::frac_cos(entry.param, alpha, t0);
    case TableKind::damped: {
      TableEntry inner_entry{entry.inner_kind, entry.inner_param, TableKind::one,
                             0.0};
      RealFn inner = table_function(inner_entry, t0, alpha);
      double k = entry.param;
      return RealFn([inner, k, t0, alpha](double t) {
        return std::exp(-k * std::pow(t - t0, alpha) / alpha) * inner(t);
      });
    }
  }
  return fn::constant(0.0);
}

double laplace_of_deriv(double F_value, double f_at_a, double s) {
  return s * F_value - f_at_a;
}

}  // namespace conforma
