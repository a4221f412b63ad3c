#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "rumor/errors.hpp"
#include "rumor/lambert.hpp"
#include "rumor/model.hpp"
#include "rumor/rootfind.hpp"

namespace rumor {

/// Shape diagnostics of the final-size function for lambda < alpha:
/// theta thresholds a (descent at the right endpoint) and b, and the
/// inflection point xbar. Informational only; the solver brackets by
/// sign evaluation.
struct BracketDiagnostics {
  double a;
  double b;
  double xbar;
};

/// Limiting outcome of the process: remaining ignorant fractions, the
/// deterministic absorption time of the time-changed flow, and the slope
/// of the spreader density there. degenerate marks the no-outbreak case
/// (y10 = 0 with non-negative final-size slope), where tau_inf = 0.
struct AsymptoticSolution {
  double x1_inf;
  double x2_inf;
  double tau_inf;
  double y1_prime_at_tau;
  bool degenerate;
  std::optional<BracketDiagnostics> diagnostics;
};

namespace detail {

// coefficient of the log term: ((lambda - alpha) theta + alpha) / alpha,
// strictly positive for valid parameters
inline double log_coefficient(const ModelParams& p) {
  return ((p.lambda - p.alpha) * p.theta + p.alpha) / p.alpha;
}

inline void require_f_domain(const InitialFractions& init, double x) {
  if (!(x > 0.0) || !(x <= init.x20))
    throw ValidationError(ErrorCode::domain_violation,
                          "f is defined on (0, x20]; got x = " + std::to_string(x));
}

inline bool lambda_equals_alpha(const ModelParams& p) {
  return std::abs(p.lambda - p.alpha) <= 1e-12 * std::max(p.lambda, p.alpha);
}

}  // namespace detail

/// Final-size function
///   f(x) = y10 + (1+p) x10 [1 - (x/x20)^(lambda/alpha)] + (x20 - x)
///          + [((lambda-alpha) theta + alpha)/alpha] ln(x/x20)
/// on (0, x20]. f(x20) = y10 exactly; f -> -inf as x -> 0+. The selected
/// root of f is the limiting B-ignorant fraction.
inline double f_eval(const ModelParams& params, const InitialFractions& init,
                     double x) {
  detail::require_f_domain(init, x);
  const double ratio = x / init.x20;
  const double power = std::pow(ratio, params.lambda / params.alpha);
  return init.y10 + (1.0 + params.p) * init.x10 * (1.0 - power) +
         (init.x20 - x) + detail::log_coefficient(params) * std::log(ratio);
}

/// Analytic derivative of f.
inline double f_prime(const ModelParams& params, const InitialFractions& init,
                      double x) {
  detail::require_f_domain(init, x);
  const double exponent = params.lambda / params.alpha;
  const double power = std::pow(x / init.x20, exponent);
  return (detail::log_coefficient(params) -
          (1.0 + params.p) * init.x10 * exponent * power) /
             x -
         1.0;
}

/// Analytic second derivative of f; negative on the whole domain when
/// lambda >= alpha (f concave there).
inline double f_second(const ModelParams& params, const InitialFractions& init,
                       double x) {
  detail::require_f_domain(init, x);
  const double exponent = params.lambda / params.alpha;
  const double power = std::pow(x / init.x20, exponent);
  return ((1.0 + params.p) * init.x10 * exponent * (1.0 - exponent) * power -
          detail::log_coefficient(params)) /
         (x * x);
}

/// Deterministic limit path of the time-changed chain:
///   x1(t) = x10 e^{-lambda t},  x2(t) = x20 e^{-alpha t},
///   y1(t) = y10 + (1+p)(x10 - x1) + (x20 - x2) + [theta(alpha-lambda) - alpha] t.
inline Density path_eval(const ModelParams& params, const InitialFractions& init,
                         double t) {
  if (!(t >= 0.0))
    throw ValidationError(ErrorCode::domain_violation, "path time must be >= 0");
  const double x1 = init.x10 * std::exp(-params.lambda * t);
  const double x2 = init.x20 * std::exp(-params.alpha * t);
  const double y1 = init.y10 + (1.0 + params.p) * (init.x10 - x1) +
                    (init.x20 - x2) +
                    (params.theta * (params.alpha - params.lambda) - params.alpha) * t;
  return {x1, x2, y1};
}

/// Slope of the spreader density along the limit path:
///   y1'(t) = lambda [(1+p) x1(t) - theta] - alpha (1 - theta - x2(t)).
inline double y1_prime_at(const ModelParams& params, const InitialFractions& init,
                          double t) {
  const Density v = path_eval(params, init, t);
  return params.lambda * ((1.0 + params.p) * v.x1 - params.theta) -
         params.alpha * (1.0 - params.theta - v.x2);
}

/// Bundled evaluators for one (params, init) configuration.
struct DeterministicPath {
  ModelParams params;
  InitialFractions init;

  Density operator()(double t) const { return path_eval(params, init, t); }
  double f(double x) const { return f_eval(params, init, x); }
};

namespace detail {

inline BracketDiagnostics bracket_diagnostics(const ModelParams& p,
                                              const InitialFractions& init) {
  const double gap = p.alpha - p.lambda;
  const double a =
      (p.alpha - p.alpha * init.x20 - p.lambda * init.x10 * (1.0 + p.p)) / gap;
  const double b =
      (p.alpha * p.alpha - p.lambda * init.x10 * (1.0 + p.p) * gap) /
      (p.alpha * gap);
  const double xbar =
      init.x20 *
      std::pow((p.alpha + (p.lambda - p.alpha) * p.theta) * p.alpha /
                   (init.x10 * p.lambda * gap * (1.0 + p.p)),
               p.alpha / p.lambda);
  return {a, b, xbar};
}

// Geometric descent from `from` until pred holds; returns the first hit.
template <class Pred>
double descend_until(double from, Pred pred) {
  double x = from;
  for (int i = 0; i < 2000; ++i) {
    x *= 0.5;
    if (pred(x)) return x;
  }
  throw NumericError(ErrorCode::bracket_failure,
                     "no bracket endpoint found by geometric descent");
}

}  // namespace detail

/// Solves for the limiting ignorant fractions.
///
/// The selected root is the unique zero of f in (0, x20] with f' >= 0:
/// the ascending piece is the whole domain when f'(x20) >= 0 (f concave
/// for lambda >= alpha; for lambda < alpha that configuration forces the
/// inflection point past x20), otherwise it ends at the unique interior
/// zero of f', located by sign bisection. Brent refinement then drives
/// |f| below 1e-12 on a bracket narrower than 1e-14.
inline AsymptoticSolution solve_asymptotics(const ModelParams& params,
                                            const InitialFractions& init) {
  validate(params, init);
  const double x20 = init.x20;
  auto f = [&](double x) { return f_eval(params, init, x); };
  auto df = [&](double x) { return f_prime(params, init, x); };

  std::optional<BracketDiagnostics> diagnostics;
  if (!detail::lambda_equals_alpha(params) && params.lambda < params.alpha)
    diagnostics = detail::bracket_diagnostics(params, init);

  AsymptoticSolution out{};
  out.diagnostics = diagnostics;

  const double slope_right = df(x20);
  double ascend_hi = x20;
  double f_hi = init.y10;  // f(x20) = y10 exactly
  if (slope_right < 0.0) {
    // f' > 0 near 0 and < 0 at x20 with a single crossing: bisect for it
    double lo = detail::descend_until(x20, [&](double x) { return df(x) > 0.0; });
    double hi = x20;
    for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
      const double mid = 0.5 * (lo + hi);
      (df(mid) > 0.0 ? lo : hi) = mid;
    }
    ascend_hi = lo;  // the f' > 0 side, so the root below keeps f' >= 0
    f_hi = f(ascend_hi);
    if (f_hi < 0.0)
      throw NumericError(ErrorCode::bracket_failure,
                         "f negative at its maximizer; no admissible root");
  } else if (init.y10 == 0.0) {
    // already at the root: no outbreak
    out.x1_inf = init.x10;
    out.x2_inf = x20;
    out.tau_inf = 0.0;
    out.y1_prime_at_tau = y1_prime_at(params, init, 0.0);
    out.degenerate = true;
    return out;
  }

  const double f_lo_probe = f_hi;  // reused below only for the f_hi == 0 shortcut
  double x_root;
  if (f_lo_probe == 0.0) {
    x_root = ascend_hi;
  } else {
    double lo = detail::descend_until(ascend_hi, [&](double x) { return f(x) < 0.0; });
    const RootResult r =
        find_root_brent(f, lo, ascend_hi, f(lo), f_hi, 1e-14, 1e-12);
    x_root = r.x;
  }

  out.x2_inf = x_root;
  out.x1_inf = init.x10 * std::pow(x_root / x20, params.lambda / params.alpha);
  out.tau_inf = -std::log(x_root / x20) / params.alpha;
  out.y1_prime_at_tau = y1_prime_at(params, init, out.tau_inf);
  out.degenerate = false;
  return out;
}

/// Closed form of the limiting fractions for alpha = lambda, p = 1, via
/// the principal Lambert branch: with c = 2 x10 + x20,
///   x1_inf = -(x10/c) W0(-c e^{-(y10+c)}),  x2_inf = -(x20/c) W0(...).
/// Throws unless the parameter precondition holds.
inline std::pair<double, double> lambert_solution(const ModelParams& params,
                                                  const InitialFractions& init) {
  if (!detail::lambda_equals_alpha(params) || std::abs(params.p - 1.0) > 1e-12)
    throw ValidationError(ErrorCode::domain_violation,
                          "closed form requires alpha = lambda and p = 1");
  const double c = 2.0 * init.x10 + init.x20;
  const double w = lambert_w0(-c * std::exp(-(init.y10 + c)));
  return {-(init.x10 / c) * w, -(init.x20 / c) * w};
}

}  // namespace rumor
