#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "conforma/errors.hpp"

namespace conforma {

/// Controls every singular-weight integral in the library.
struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_subdiv = 1 << 14;
  int nodes_per_panel = 15;

  /// Throws PreconditionError when a field is out of range.
  void validate() const;

  /// Defaults, with rel_tol replaced by $CONFORMA_TOL when it is set.
  static QuadratureSpec from_env();
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Cached n-point Gauss-Legendre rule (n >= 2).
const GaussRule& gauss_legendre(int n);

template <typename T>
struct QuadResult {
  T value;
  double error;
  double magnitude;  // integral of |f|, estimated on the same nodes
  int panels;
  long evaluations;
};

/// Norm and finiteness hooks for quadrature value types. Specialized for
/// vector values where they are used.
template <typename T>
struct QuadTraits;

template <>
struct QuadTraits<double> {
  static double norm(double x) { return std::abs(x); }
  static bool finite(double x) { return std::isfinite(x); }
};

namespace detail {

template <typename T>
struct Panel {
  double lo;
  double hi;
  T coarse;   // one rule over [lo, hi]
  T fine;     // rule over each half, summed
  double error;
  double abs_mass;
};

template <typename T, typename F>
T apply_rule(const F& f, double lo, double hi, const GaussRule& rule,
             double* abs_mass, long* evals) {
  double half = 0.5 * (hi - lo);
  double mid = 0.5 * (hi + lo);
  T sum{};
  double mass = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    double x = mid + half * rule.nodes[i];
    T fx = f(x);
    if (!QuadTraits<T>::finite(fx)) {
      throw DomainError("integrand is not finite at x = " + std::to_string(x));
    }
    if (i == 0) {
      sum = rule.weights[i] * fx;
    } else {
      sum = sum + rule.weights[i] * fx;
    }
    mass += rule.weights[i] * QuadTraits<T>::norm(fx);
  }
  ++*evals;
  *evals += static_cast<long>(rule.nodes.size()) - 1;
  if (abs_mass) *abs_mass += std::abs(half) * mass;
  return half * sum;
}

}  // namespace detail

/// Globally adaptive Gauss-Legendre quadrature of f over [lo, hi].
///
/// Each panel is integrated once whole and once as two halves; the
/// difference is its error estimate. The worst panel is bisected until the
/// summed estimate meets max(abs_tol, rel_tol |I|), or the roundoff floor of
/// the integrand. Panels are summed in left-to-right order so the result is
/// reproducible bit for bit.
template <typename T = double, typename F>
QuadResult<T> integrate(const F& f, double lo, double hi,
                        const QuadratureSpec& spec) {
  spec.validate();
  if (lo == hi) {
    if constexpr (std::is_same_v<T, double>) {
      return QuadResult<T>{0.0, 0.0, 0.0, 0, 0};
    } else {
      return QuadResult<T>{f(lo) * 0.0, 0.0, 0.0, 0, 1};
    }
  }
  const GaussRule& rule = gauss_legendre(spec.nodes_per_panel);
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  long evals = 0;

  auto make_panel = [&](double a, double b, const T* known_coarse) {
    detail::Panel<T> p{a, b, T{}, T{}, 0.0, 0.0};
    double m = 0.5 * (a + b);
    double mass = 0.0;
    if (known_coarse) {
      p.coarse = *known_coarse;
    } else {
      p.coarse = detail::apply_rule<T>(f, a, b, rule, nullptr, &evals);
    }
    T left = detail::apply_rule<T>(f, a, m, rule, &mass, &evals);
    T right = detail::apply_rule<T>(f, m, b, rule, &mass, &evals);
    p.fine = left + right;
    p.error = QuadTraits<T>::norm(p.fine - p.coarse);
    p.abs_mass = mass;
    return std::pair{p, std::pair{left, right}};
  };

  struct Node {
    detail::Panel<T> panel;
    T left_half;
    T right_half;
  };
  auto worse = [](const Node& x, const Node& y) {
    if (x.panel.error != y.panel.error) return x.panel.error < y.panel.error;
    return x.panel.lo > y.panel.lo;
  };
  std::priority_queue<Node, std::vector<Node>, decltype(worse)> active(worse);
  std::vector<Node> settled;

  {
    auto [p, halves] = make_panel(lo, hi, nullptr);
    active.push(Node{p, halves.first, halves.second});
  }
  int subdivisions = 0;

  auto totals = [&](T* value, double* error, double* mass) {
    std::vector<const detail::Panel<T>*> all;
    auto copy = active;
    std::vector<Node> drained;
    while (!copy.empty()) {
      drained.push_back(copy.top());
      copy.pop();
    }
    for (const auto& n : drained) all.push_back(&n.panel);
    for (const auto& n : settled) all.push_back(&n.panel);
    std::sort(all.begin(), all.end(),
              [](auto* x, auto* y) { return x->lo < y->lo; });
    *error = 0.0;
    *mass = 0.0;
    bool first = true;
    for (auto* p : all) {
      if (first) {
        *value = p->fine;
        first = false;
      } else {
        *value = *value + p->fine;
      }
      *error += p->error;
      *mass += p->abs_mass;
    }
  };

  // Running sums for the stopping test; the reported value is recomputed in
  // panel order at the end.
  double run_error = active.top().panel.error;
  double run_mass = active.top().panel.abs_mass;
  T run_value = active.top().panel.fine;

  while (true) {
    double floor = 64.0 * kEps * run_mass;
    double target = std::max({spec.abs_tol,
                              spec.rel_tol * QuadTraits<T>::norm(run_value),
                              floor});
    if (run_error <= target || active.empty()) break;
    if (subdivisions >= spec.max_subdiv) {
      T value;
      double err, mass;
      totals(&value, &err, &mass);
      throw AccuracyError("quadrature did not reach tolerance within " +
                              std::to_string(spec.max_subdiv) +
                              " subdivisions (error estimate " +
                              std::to_string(err) + ")",
                          QuadTraits<T>::norm(value), err);
    }
    Node worst = active.top();
    active.pop();
    const auto& p = worst.panel;
    double mid = 0.5 * (p.lo + p.hi);
    bool too_narrow = !(mid > p.lo && mid < p.hi) ||
                      (p.hi - p.lo) <= 4.0 * kEps * std::max(std::abs(p.lo),
                                                             std::abs(p.hi));
    if (too_narrow || p.error <= 64.0 * kEps * p.abs_mass) {
      settled.push_back(worst);
      continue;
    }
    auto [lp, lh] = make_panel(p.lo, mid, &worst.left_half);
    auto [rp, rh] = make_panel(mid, p.hi, &worst.right_half);
    ++subdivisions;
    run_error += lp.error + rp.error - p.error;
    run_mass += lp.abs_mass + rp.abs_mass - p.abs_mass;
    run_value = run_value + (lp.fine + rp.fine - p.fine);
    active.push(Node{lp, lh.first, lh.second});
    active.push(Node{rp, rh.first, rh.second});
  }

  T value;
  double err, mass;
  totals(&value, &err, &mass);
  double floor = 64.0 * kEps * mass;
  double target =
      std::max({spec.abs_tol, spec.rel_tol * QuadTraits<T>::norm(value), floor});
  if (err > target) {
    throw AccuracyError("quadrature error estimate " + std::to_string(err) +
                            " exceeds tolerance " + std::to_string(target),
                        QuadTraits<T>::norm(value), err);
  }
  return QuadResult<T>{value, err, mass,
                       static_cast<int>(active.size() + settled.size()), evals};
}

}  // namespace conforma
