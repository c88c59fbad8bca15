#pragma once

namespace conforma {

/// A positive order alpha split as alpha = n + beta with n >= 0 an integer
/// and beta in (0, 1]. Integer orders land on beta = 1.
struct FracOrder {
  double alpha;
  int n;
  double beta;
};

/// Throws DomainError for non-positive or non-finite alpha.
FracOrder make_order(double alpha);

/// Which end of the interval an operator is anchored at.
enum class Side { left, right };

}  // namespace conforma
