#pragma once

namespace conforma {

/// Gamma function by a Lanczos approximation (g = 671/128, 14 terms) with
/// reflection below 1/2. Relative accuracy is around 1e-14 on (0, 50].
/// Throws DomainError at the poles 0, -1, -2, ...
double gamma_fn(double x);

/// log|Gamma(x)| for x > 0.
double log_gamma(double x);

}  // namespace conforma
