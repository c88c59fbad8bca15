#include "conforma/order.hpp"

#include <cmath>
#include <string>

#include "conforma/errors.hpp"

namespace conforma {

FracOrder make_order(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0) {
    throw DomainError("order must be positive and finite, got " +
                      std::to_string(alpha));
  }
  // n is the unique integer with n < alpha <= n + 1.
  int n = static_cast<int>(std::ceil(alpha)) - 1;
  double beta = alpha - n;
  // alpha - n is exact for alpha in (n, n+1] in binary floating point
  // (Sterbenz), so the invariant n + beta == alpha holds bit for bit.
  return FracOrder{alpha, n, beta};
}

}  // namespace conforma
