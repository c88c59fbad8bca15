#include "conforma/quadrature.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace conforma {

void QuadratureSpec::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw PreconditionError("quadrature tolerances must be positive");
  }
  if (nodes_per_panel < 2) {
    throw PreconditionError("quadrature needs at least 2 nodes per panel");
  }
  if (max_subdiv < 0) {
    throw PreconditionError("max_subdiv must be non-negative");
  }
}

QuadratureSpec QuadratureSpec::from_env() {
  QuadratureSpec spec;
  if (const char* env = std::getenv("CONFORMA_TOL")) {
    char* end = nullptr;
    double tol = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(tol > 0.0)) {
      throw PreconditionError(std::string("CONFORMA_TOL is not a positive number: ") +
                              env);
    }
    spec.rel_tol = tol;
  }
  return spec;
}

namespace {

GaussRule build_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  // Newton on P_n from the Chebyshev-like initial guesses; symmetric pairs.
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<GaussRule>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GaussRule>(build_rule(n));
  return *slot;
}

}  // namespace conforma
