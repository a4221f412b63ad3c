#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "rumor/errors.hpp"

namespace rumor {

struct RootResult {
  double x;
  double fx;
  int iterations;
};

/// Bracketed scalar root refinement: inverse-quadratic / secant steps with
/// a guaranteed bisection fallback (Brent's scheme). fa and fb must have
/// opposite signs. Iterates until the bracket is narrower than x_tol and
/// |f| is below f_tol.
template <class F>
RootResult find_root_brent(F&& f, double a, double b, double fa, double fb,
                           double x_tol = 1e-14, double f_tol = 1e-12,
                           int max_iter = 200) {
  if (fa == 0.0) return {a, fa, 0};
  if (fb == 0.0) return {b, fb, 0};
  if ((fa > 0.0) == (fb > 0.0))
    throw NumericError(ErrorCode::bracket_failure,
                       "no sign change on [" + std::to_string(a) + ", " +
                           std::to_string(b) + "]");
  double c = a, fc = fa;
  double d = b - a, e = d;
  for (int iter = 1; iter <= max_iter; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol1 =
        std::max(0.5 * x_tol, 2.0 * std::numeric_limits<double>::epsilon() * std::abs(b));
    const double xm = 0.5 * (c - b);
    if ((std::abs(xm) <= tol1 && std::abs(fb) <= f_tol) || fb == 0.0)
      return {b, fb, iter};
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      // interpolation step (secant, or inverse quadratic when a, b, c differ)
      const double s = fb / fa;
      double p, q;
      if (a == c) {
        p = 2.0 * xm * s;
        q = 1.0 - s;
      } else {
        const double r1 = fa / fc, r2 = fb / fc;
        p = s * (2.0 * xm * r1 * (r1 - r2) - (b - a) * (r2 - 1.0));
        q = (r1 - 1.0) * (r2 - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q;
      p = std::abs(p);
      if (2.0 * p < std::min(3.0 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = xm;
        e = d;
      }
    } else {
      d = xm;
      e = d;
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol1) ? d : (xm > 0.0 ? tol1 : -tol1);
    fb = f(b);
  }
  throw NumericError(ErrorCode::bracket_failure,
                     "root refinement exceeded " + std::to_string(max_iter) +
                         " iterations");
}

template <class F>
RootResult find_root_brent(F&& f, double a, double b, double x_tol = 1e-14,
                           double f_tol = 1e-12, int max_iter = 200) {
  const double fa = f(a);
  const double fb = f(b);
  return find_root_brent(std::forward<F>(f), a, b, fa, fb, x_tol, f_tol, max_iter);
}

}  // namespace rumor
