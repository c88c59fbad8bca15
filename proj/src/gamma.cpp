#include "conforma/gamma.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "conforma/errors.hpp"

namespace conforma {

namespace {

constexpr double kShift = 671.0 / 128.0;
constexpr double kSqrtTwoPi = 2.5066282746310005;

constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,
    14.1360979747417471,     -0.491913816097620199,
    .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,
    -.210264441724104883e-3, .217439618115212643e-3,
    -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5};

// Gamma(x) = sqrt(2 pi) t^{x+1/2} e^{-t} S(x) / x,  t = x + 671/128.
double lanczos_series(double x) {
  double sum = 0.999999999999997092;
  double y = x;
  for (double c : kLanczos) sum += c / ++y;
  return sum;
}

}  // namespace

double gamma_fn(double x) {
  if (!std::isfinite(x)) throw DomainError("gamma of a non-finite value");
  if (x <= 0.0 && x == std::floor(x)) {
    throw DomainError("gamma has a pole at non-positive integers");
  }
  if (x < 0.5) {
    return std::numbers::pi /
           (std::sin(std::numbers::pi * x) * gamma_fn(1.0 - x));
  }
  double t = x + kShift;
  // t^{x+1/2} split in two so large x does not overflow before e^{-t}.
  double half = std::pow(t, 0.5 * (x + 0.5));
  return kSqrtTwoPi * (half * std::exp(-t) * half) * lanczos_series(x) / x;
}

double log_gamma(double x) {
  if (!(x > 0.0)) throw DomainError("log_gamma needs a positive argument");
  double t = x + kShift;
  return (x + 0.5) * std::log(t) - t +
         std::log(kSqrtTwoPi * lanczos_series(x) / x);
}

}  // namespace conforma
