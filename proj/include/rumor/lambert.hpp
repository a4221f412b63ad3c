#pragma once

#include <cmath>
#include <string>

#include "rumor/errors.hpp"

namespace rumor {

/// Principal branch W0 of the Lambert W function (the inverse of
/// w -> w e^w on [-1/e, inf)), to ~1e-15 relative residual.
///
/// Initial guess: branch-point series in sqrt(2(1 + e x)) near -1/e,
/// rational/log guesses elsewhere; refined by Halley iteration.
inline double lambert_w0(double x) {
  constexpr double kInvE = 0.367879441171442321595523770161460867;  // 1/e
  if (std::isnan(x))
    throw NumericError(ErrorCode::domain_violation, "lambert_w0(nan)");
  if (x < -kInvE) {
    // tolerate arguments a rounding error below the branch point
    if (x < -kInvE - 1e-14 * kInvE)
      throw NumericError(ErrorCode::domain_violation,
                         "lambert_w0 argument " + std::to_string(x) +
                             " below -1/e");
    x = -kInvE;
  }
  if (x == -kInvE) return -1.0;
  if (x == 0.0) return 0.0;

  double w;
  if (x < -0.25) {
    const double rho = std::sqrt(2.0 * (1.0 + std::exp(1.0) * x));
    w = -1.0 + rho * (1.0 + rho * (-1.0 / 3.0 + rho * (11.0 / 72.0)));
  } else if (x < std::exp(1.0)) {
    w = x / (1.0 + x);
  } else {
    const double l = std::log(x);
    w = l - std::log(l);
  }

  for (int iter = 0; iter < 10; ++iter) {
    const double ew = std::exp(w);
    const double r = w * ew - x;
    const double wp1 = w + 1.0;
    const double step = r / (ew * wp1 - 0.5 * (w + 2.0) * r / wp1);
    w -= step;
    if (std::abs(step) <= 2e-16 * (1.0 + std::abs(w))) break;
  }
  return w;
}

}  // namespace rumor
