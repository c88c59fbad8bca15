#include "conforma/series.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "conforma/errors.hpp"

namespace conforma {

namespace {

void require_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("series order must lie in (0, 1]");
  }
}

double binomial(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// F^{(k)}(0) from forward differences on h0 2^{-i}, Richardson in h.
double forward_derivative_at_zero(const ScalarMap& F, int k, double h0,
                                  double* error) {
  constexpr int kLevels = 8;
  std::vector<std::vector<double>> table(kLevels);
  double best = 0.0;
  double best_err = std::numeric_limits<double>::infinity();
  double h = h0;
  for (int i = 0; i < kLevels; ++i, h *= 0.5) {
    double diff = 0.0;
    for (int j = 0; j <= k; ++j) {
      double sign = ((k - j) % 2 == 0) ? 1.0 : -1.0;
      diff += sign * binomial(k, j) * F(j * h);
    }
    table[i].push_back(diff / std::pow(h, k));
    if (i == 0) {
      best = table[0][0];
      continue;
    }
    double factor = 2.0;
    for (int j = 1; j <= i; ++j, factor *= 2.0) {
      double next = table[i][j - 1] +
                    (table[i][j - 1] - table[i - 1][j - 1]) / (factor - 1.0);
      table[i].push_back(next);
      double err = std::max(std::abs(next - table[i][j - 1]),
                            std::abs(next - table[i - 1][j - 1]));
      if (err <= best_err) {
        best_err = err;
        best = next;
      }
    }
    if (std::abs(table[i][i] - table[i - 1][i - 1]) >= 2.0 * best_err) break;
  }
  *error = best_err;
  return best;
}

}  // namespace

FracSeries taylor_coeffs(const RealFn& f, double t0, double alpha, int K) {
  require_alpha(alpha);
  if (K < 0) throw DomainError("K must be non-negative");
  if (K > 4) {
    throw DomainError("numeric coefficient extraction is limited to K <= 4");
  }
  // In u = (t - t0)^alpha / alpha the sequential derivative T_alpha^k is
  // the ordinary k-th derivative of F(u) = f(t0 + (alpha u)^{1/alpha}), so
  // the right limit at t0 is F^{(k)}(0).
  ScalarMap F = [&f, t0, alpha](double u) {
    return f(t0 + std::pow(alpha * u, 1.0 / alpha));
  };
  FracSeries s{t0, alpha, {}, std::numeric_limits<double>::infinity()};
  s.coeffs.push_back(f(t0));
  double scale = 1.0;  // alpha^k k!
  for (int k = 1; k <= K; ++k) {
    scale *= alpha * k;
    double err = 0.0;
    double dk = forward_derivative_at_zero(F, k, 0.1, &err);
    if (!(err <= 1e-5 * (1.0 + std::abs(dk)))) {
      throw ConvergenceError("sequential derivative of order " +
                             std::to_string(k) + " at t0 did not converge");
    }
    s.coeffs.push_back(dk / scale);
  }
  if (K >= 2) s.radius = ratio_radius(s);
  return s;
}

double partial_sum(const FracSeries& s, int n, double t) {
  if (t < s.t0) throw DomainError("series evaluated left of its base point");
  if (!(t - s.t0 < s.radius)) {
    throw DomainError("series evaluated outside its validity interval");
  }
  double x = std::pow(t - s.t0, s.alpha);
  int last = std::min<int>(n, static_cast<int>(s.coeffs.size()) - 1);
  // Neumaier summation in ascending k.
  double sum = 0.0;
  double comp = 0.0;
  double power = 1.0;
  for (int k = 0; k <= last; ++k) {
    double term = s.coeffs[k] * power;
    double next = sum + term;
    if (std::abs(sum) >= std::abs(term)) {
      comp += (sum - next) + term;
    } else {
      comp += (term - next) + sum;
    }
    sum = next;
    power *= x;
  }
  return sum + comp;
}

double eval_series(const FracSeries& s, double t) {
  return partial_sum(s, static_cast<int>(s.coeffs.size()) - 1, t);
}

FracSeries builtin_series(SeriesKind kind, double t0, double alpha, int K) {
  require_alpha(alpha);
  if (K < 0) throw DomainError("K must be non-negative");
  FracSeries s{t0, alpha, std::vector<double>(K + 1, 0.0),
               std::numeric_limits<double>::infinity()};
  // e_k = 1 / (alpha^k k!)
  double e = 1.0;
  for (int k = 0; k <= K; ++k) {
    if (k > 0) e /= k * alpha;
    switch (kind) {
      case SeriesKind::frac_exp:
        s.coeffs[k] = e;
        break;
      case SeriesKind::frac_sin:
        if (k % 2 == 1) s.coeffs[k] = ((k / 2) % 2 == 0) ? e : -e;
        break;
      case SeriesKind::frac_cos:
        if (k % 2 == 0) s.coeffs[k] = ((k / 2) % 2 == 0) ? e : -e;
        break;
      case SeriesKind::frac_geom:
        s.coeffs[k] = std::pow(alpha, -k);
        break;
    }
  }
  if (kind == SeriesKind::frac_geom) s.radius = std::pow(alpha, 1.0 / alpha);
  return s;
}

double remainder_bound(double M, int n, double alpha, double t0, double t) {
  if (M < 0.0) throw DomainError("M must be non-negative");
  if (n < 0) throw DomainError("n must be non-negative");
  if (t < t0) throw DomainError("remainder bound needs t >= t0");
  double denom = 1.0;
  for (int k = 1; k <= n + 1; ++k) denom *= alpha * k;
  return M * std::pow(t - t0, alpha * (n + 1)) / denom;
}

double ratio_radius(const FracSeries& s) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  if (s.coeffs.size() < 3) {
    throw DomainError("ratio test needs at least 3 coefficients");
  }
  std::vector<int> nonzero;
  for (std::size_t k = 0; k < s.coeffs.size(); ++k) {
    if (s.coeffs[k] != 0.0) nonzero.push_back(static_cast<int>(k));
  }
  if (nonzero.size() < 3) return kInf;
  // Root-ratio between consecutive nonzero slots handles gapped series.
  std::vector<double> rho;
  for (std::size_t m = 0; m + 1 < nonzero.size(); ++m) {
    int i = nonzero[m];
    int j = nonzero[m + 1];
    rho.push_back(std::pow(std::abs(s.coeffs[i] / s.coeffs[j]),
                           1.0 / (j - i)));
  }
  double last = rho.back();
  double middle = rho[(rho.size() - 1) / 2];
  // Ratios that keep growing (factorial decay) mean an entire series.
  if (!std::isfinite(last) || last > 1.25 * middle) return kInf;
  return std::pow(last, 1.0 / s.alpha);
}

FracSeries term_derivative(const FracSeries& s) {
  FracSeries d{s.t0, s.alpha, {}, s.radius};
  for (std::size_t k = 1; k < s.coeffs.size(); ++k) {
    d.coeffs.push_back(static_cast<double>(k) * s.alpha * s.coeffs[k]);
  }
  if (d.coeffs.empty()) d.coeffs.push_back(0.0);
  return d;
}

std::string to_text(const FracSeries& s) {
  std::string out;
  char buf[64];
  auto num = [&](double v) {
    if (std::isinf(v)) return std::string(v > 0 ? "inf" : "-inf");
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return std::string(buf);
  };
  out += num(s.t0) + " " + num(s.alpha) + " " +
         std::to_string(static_cast<int>(s.coeffs.size()) - 1) + " " +
         num(s.radius) + "\n";
  for (double c : s.coeffs) out += num(c) + "\n";
  return out;
}

FracSeries series_from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  auto read = [&](const char* what) {
    std::string token;
    if (!(in >> token)) {
      throw DomainError(std::string("series text: missing ") + what);
    }
    if (token == "inf") return std::numeric_limits<double>::infinity();
    std::size_t used = 0;
    double v = std::stod(token, &used);
    if (used != token.size()) {
      throw DomainError("series text: bad number '" + token + "'");
    }
    return v;
  };
  FracSeries s;
  s.t0 = read("t0");
  s.alpha = read("alpha");
  double K = read("K");
  s.radius = read("radius");
  if (K < 0 || K != std::floor(K)) throw DomainError("series text: bad K");
  for (int k = 0; k <= static_cast<int>(K); ++k) {
    s.coeffs.push_back(read("coefficient"));
  }
  require_alpha(s.alpha);
  return s;
}

}  // namespace conforma
