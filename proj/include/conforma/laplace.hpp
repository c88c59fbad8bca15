#pragma once

#include "conforma/quadrature.hpp"
#include "conforma/real_fn.hpp"

namespace conforma {

/// Parameters of one fractional Laplace transform evaluation.
/// `tail_bound` is a growth rate c with |f(t0 + (alpha u)^{1/alpha})| <= C e^{c u};
/// the transform converges for s > c.
struct TransformQuery {
  double t0 = 0.0;
  double alpha = 1.0;
  double s = 1.0;
  double tail_bound = 0.0;
};

/// int_{t0}^inf e^{-s (t-t0)^alpha / alpha} f(t) (t - t0)^{alpha-1} dt,
/// computed as the ordinary transform of u -> f(t0 + (alpha u)^{1/alpha}).
/// The half line is covered by panels of length 5 / (s - tail_bound) until a
/// panel falls below tolerance; the remaining tail is added as a geometric
/// series. DivergenceError when s <= tail_bound.
double laplace_numeric(const RealFn& f, const TransformQuery& q,
                       const QuadratureSpec& spec = {});

enum class TableKind { one, t, t_pow, frac_exp, frac_sin, frac_cos, damped };

/// One row of the transform table. `param` is p (t_pow), lambda (frac_exp),
/// omega (frac_sin, frac_cos) or k (damped); a damped entry multiplies the
/// inner entry by e^{-k (t-t0)^alpha / alpha}.
struct TableEntry {
  TableKind kind = TableKind::one;
  double param = 0.0;
  TableKind inner_kind = TableKind::one;
  double inner_param = 0.0;
};

/// The transform converges for s greater than this value.
double region_boundary(const TableEntry& entry);

/// Closed-form transform. DomainError when s is outside the entry's region
/// or the entry's own restrictions fail (t_pow needs t0 = 0 and p > -alpha).
double laplace_table(const TableEntry& entry, double t0, double alpha, double s);

/// The time-domain function a table entry describes.
RealFn table_function(const TableEntry& entry, double t0, double alpha);

/// Transform of T_alpha f given F and f(a): s F - f(a).
double laplace_of_deriv(double F_value, double f_at_a, double s);

}  // namespace conforma
