#pragma once

#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "conforma/real_fn.hpp"

namespace conforma {

/// Fractional power series sum_k c_k (t - t0)^{k alpha}, one coefficient per
/// power slot (zeros kept). `radius` is the half-width of the validity
/// interval [t0, t0 + radius) in t, +inf when unbounded.
struct FracSeries {
  double t0 = 0.0;
  double alpha = 1.0;
  std::vector<double> coeffs;
  double radius = std::numeric_limits<double>::infinity();
};

enum class SeriesKind { frac_exp, frac_sin, frac_cos, frac_geom };

/// Coefficients c_k = (T_alpha^{t0})^k f (t0) / (alpha^k k!), k = 0..K, from
/// samples of f. Supports K <= 4; higher slots are too noisy to extract.
FracSeries taylor_coeffs(const RealFn& f, double t0, double alpha, int K);

/// sum_k c_k (t - t0)^{k alpha} with compensated summation. DomainError for
/// t < t0 or t outside the validity interval.
double eval_series(const FracSeries& s, double t);

/// The same sum restricted to k = 0..n.
double partial_sum(const FracSeries& s, int n, double t);

/// Exact coefficients of the fractional exp, sin, cos and geometric series
/// (the last one is 1 / (1 - (t - t0)^alpha / alpha), radius alpha^{1/alpha}).
FracSeries builtin_series(SeriesKind kind, double t0, double alpha, int K);

/// Fractional Taylor inequality: M (t - t0)^{alpha(n+1)} / (alpha^{n+1} (n+1)!).
double remainder_bound(double M, int n, double alpha, double t0, double t);

/// Radius of convergence in t from successive coefficient ratios; +inf when
/// the ratios grow without bound or the tail is all zeros.
double ratio_radius(const FracSeries& s);

/// Term-by-term T_alpha^{t0}: slot k-1 receives k alpha c_k.
FracSeries term_derivative(const FracSeries& s);

/// Text form: "t0 alpha K radius" on the first line, then one coefficient
/// per line at full precision.
std::string to_text(const FracSeries& s);
FracSeries series_from_text(std::string_view text);

}  // namespace conforma
