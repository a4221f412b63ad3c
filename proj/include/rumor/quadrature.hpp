#pragma once

#include <cmath>
#include <queue>
#include <string>
#include <utility>
#include <vector>

#include "rumor/errors.hpp"

namespace rumor {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  int max_subdivisions = 10000;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1]
// (QUADPACK dqk15 abscissae/weights; Gauss points sit at odd indices).
inline constexpr double kGk15Nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F>
void gk15_panel(F& f, double a, double b, double& value, double& error) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double result_gauss = kGaussWeights[3] * fc;
  double result_kronrod = kKronrodWeights[7] * fc;
  for (int j = 0; j < 7; ++j) {
    const double offset = half * kGk15Nodes[j];
    const double fsum = f(center - offset) + f(center + offset);
    result_kronrod += kKronrodWeights[j] * fsum;
    if (j % 2 == 1) result_gauss += kGaussWeights[j / 2] * fsum;
  }
  value = result_kronrod * half;
  error = std::abs((result_kronrod - result_gauss) * half);
}

struct Panel {
  double error;
  double value;
  double a;
  double b;
  bool operator<(const Panel& other) const { return error < other.error; }
};

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b] to an absolute
/// tolerance: the worst panel is bisected until the summed error estimate
/// drops below abs_tol. Throws NumericError once the subdivision cap is
/// exceeded.
template <class F>
double integrate(F&& f, double a, double b, QuadratureOptions opt = {}) {
  if (a == b) return 0.0;
  std::priority_queue<detail::Panel> panels;
  double value, error;
  detail::gk15_panel(f, a, b, value, error);
  panels.push({error, value, a, b});
  double total_value = value;
  double total_error = error;
  int subdivisions = 0;
  while (total_error > opt.abs_tol) {
    if (++subdivisions > opt.max_subdivisions)
      throw NumericError(ErrorCode::quadrature_failure,
                         "subdivision cap " + std::to_string(opt.max_subdivisions) +
                             " reached (remaining error " +
                             std::to_string(total_error) + ")");
    const detail::Panel worst = panels.top();
    panels.pop();
    total_value -= worst.value;
    total_error -= worst.error;
    const double mid = 0.5 * (worst.a + worst.b);
    for (const auto& [lo, hi] :
         {std::pair{worst.a, mid}, std::pair{mid, worst.b}}) {
      detail::gk15_panel(f, lo, hi, value, error);
      panels.push({error, value, lo, hi});
      total_value += value;
      total_error += error;
    }
  }
  return total_value;
}

}  // namespace rumor
