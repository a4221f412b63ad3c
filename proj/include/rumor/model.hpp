#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <string>

#include "rumor/errors.hpp"

namespace rumor {

/// Rate and group-shape parameters of the two-group rumor chain.
///
/// A population of size N splits into N1 = theta*N "A-individuals" (who
/// spread) and N2 = (1-theta)*N "B-individuals" (who only stifle).
/// lambda is a spreader's contact rate with A-individuals, alpha the
/// contact rate with B-individuals, and p the probability that a
/// contacted A-ignorant becomes a spreader rather than a stifler.
struct ModelParams {
  double theta;
  double lambda;
  double alpha;
  double p;
};

/// Limiting initial fractions of the four compartments:
/// x10 A-ignorants, x20 B-ignorants, y10 A-spreaders, z0 stiflers.
/// They must sum to 1, with x10 > 0 and x20 > 0.
struct InitialFractions {
  double x10;
  double x20;
  double y10;
  double z0;
};

/// Integer compartment counts of the finite chain. z is stored redundantly
/// and cross-checked (x1 + x2 + y1 + z == n); n1/n2 are the group sizes.
struct PopulationState {
  std::int64_t x1;
  std::int64_t x2;
  std::int64_t y1;
  std::int64_t z;
  std::int64_t n;
  std::int64_t n1;
  std::int64_t n2;

  friend bool operator==(const PopulationState&, const PopulationState&) = default;
};

/// The four transition channels, named by their effect on the state.
enum class TransitionKind : std::uint8_t {
  x1_to_y1 = 0,  // A-ignorant contacted, turns spreader:    (-1, 0, +1)
  x2_to_z = 1,   // B-ignorant contacted, turns stifler:     ( 0,-1,  0)
  y1_to_z = 2,   // spreader meets a non-ignorant, stifled:  ( 0, 0, -1)
  x1_to_z = 3,   // A-ignorant contacted, skips to stifler:  (-1, 0,  0)
};

inline constexpr std::array<TransitionKind, 4> kAllTransitions = {
    TransitionKind::x1_to_y1, TransitionKind::x2_to_z,
    TransitionKind::y1_to_z, TransitionKind::x1_to_z};

struct Increment {
  int dx1;
  int dx2;
  int dy1;
};

inline constexpr Increment increment(TransitionKind kind) {
  switch (kind) {
    case TransitionKind::x1_to_y1: return {-1, 0, +1};
    case TransitionKind::x2_to_z: return {0, -1, 0};
    case TransitionKind::y1_to_z: return {0, 0, -1};
    case TransitionKind::x1_to_z: return {-1, 0, 0};
  }
  return {0, 0, 0};
}

inline const char* kind_token(TransitionKind kind) {
  switch (kind) {
    case TransitionKind::x1_to_y1: return "x1_to_y1";
    case TransitionKind::x2_to_z: return "x2_to_z";
    case TransitionKind::y1_to_z: return "y1_to_z";
    case TransitionKind::x1_to_z: return "x1_to_z";
  }
  return "?";
}

/// Scaled state (counts / N), the coordinates of the deterministic limit.
struct Density {
  double x1;
  double x2;
  double y1;
};

inline constexpr double kSumTolerance = 1e-12;
inline constexpr double kGroupTolerance = 1e-12;

/// Checks every parameter and initial-fraction invariant; throws a
/// ValidationError carrying the first violated one. Callers may use the
/// inputs unchanged afterwards.
inline void validate(const ModelParams& params, const InitialFractions& init) {
  if (!(params.lambda > 0.0) || !std::isfinite(params.lambda))
    throw ValidationError(ErrorCode::nonpositive_rate, "lambda must be > 0");
  if (!(params.alpha > 0.0) || !std::isfinite(params.alpha))
    throw ValidationError(ErrorCode::nonpositive_rate, "alpha must be > 0");
  if (!(params.p >= 0.0 && params.p <= 1.0))
    throw ValidationError(ErrorCode::fraction_out_of_range, "p must lie in [0,1]");
  if (!(params.theta >= 0.0 && params.theta <= 1.0))
    throw ValidationError(ErrorCode::fraction_out_of_range, "theta must lie in [0,1]");
  if (!(init.x10 > 0.0) || !(init.x10 <= 1.0))
    throw ValidationError(ErrorCode::fraction_out_of_range, "x10 must lie in (0,1]");
  if (!(init.x20 > 0.0) || !(init.x20 <= 1.0))
    throw ValidationError(ErrorCode::fraction_out_of_range, "x20 must lie in (0,1]");
  if (!(init.y10 >= 0.0 && init.y10 <= 1.0))
    throw ValidationError(ErrorCode::fraction_out_of_range, "y10 must lie in [0,1]");
  if (!(init.z0 >= 0.0 && init.z0 <= 1.0))
    throw ValidationError(ErrorCode::fraction_out_of_range, "z0 must lie in [0,1]");
  const double sum = init.x10 + init.x20 + init.y10 + init.z0;
  if (std::abs(sum - 1.0) > kSumTolerance)
    throw ValidationError(ErrorCode::sum_not_one,
                          "initial fractions sum to " + std::to_string(sum));
  if (init.x10 + init.y10 > params.theta + kGroupTolerance)
    throw ValidationError(ErrorCode::group_inconsistency,
                          "x10 + y10 exceeds theta");
  if (init.x20 > 1.0 - params.theta + kGroupTolerance)
    throw ValidationError(ErrorCode::group_inconsistency,
                          "x20 exceeds 1 - theta");
}

namespace detail {

// Largest-remainder (Hamilton) apportionment: integer counts summing to
// total, each within one of the exact product; ties broken by field order.
template <std::size_t K>
std::array<std::int64_t, K> largest_remainder(const std::array<double, K>& fractions,
                                              std::int64_t total) {
  std::array<std::int64_t, K> counts{};
  std::array<double, K> remainders{};
  std::int64_t assigned = 0;
  for (std::size_t i = 0; i < K; ++i) {
    const double exact = fractions[i] * static_cast<double>(total);
    counts[i] = static_cast<std::int64_t>(std::floor(exact));
    remainders[i] = exact - static_cast<double>(counts[i]);
    assigned += counts[i];
  }
  std::int64_t leftover = total - assigned;
  while (leftover > 0) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < K; ++i)
      if (remainders[i] > remainders[best]) best = i;
    ++counts[best];
    remainders[best] -= 1.0;
    --leftover;
  }
  while (leftover < 0) {  // only reachable through rounding of near-1 sums
    std::size_t worst = 0;
    for (std::size_t i = 1; i < K; ++i)
      if (counts[i] > 0 && (counts[worst] == 0 || remainders[i] < remainders[worst]))
        worst = i;
    --counts[worst];
    remainders[worst] += 1.0;
    ++leftover;
  }
  return counts;
}

}  // namespace detail

/// True when all PopulationState invariants hold.
inline bool state_is_valid(const PopulationState& s) {
  return s.x1 >= 0 && s.x2 >= 0 && s.y1 >= 0 && s.z >= 0 && s.n >= 1 &&
         s.n1 >= 0 && s.n2 >= 0 && s.x1 + s.x2 + s.y1 + s.z == s.n &&
         s.n1 + s.n2 == s.n && s.x1 + s.y1 <= s.n1 && s.x2 <= s.n2;
}

/// Rounds the initial fractions to integer counts for population size n,
/// using largest-remainder rounding over (x1, x2, y1, z) and (n1, n2).
/// Throws when the rounded counts cannot satisfy group consistency
/// (possible only for very small n).
inline PopulationState discretize(const ModelParams& params,
                                  const InitialFractions& init,
                                  std::int64_t n) {
  validate(params, init);
  if (n < 1)
    throw ValidationError(ErrorCode::fraction_out_of_range, "n must be >= 1");
  const auto groups =
      detail::largest_remainder<2>({params.theta, 1.0 - params.theta}, n);
  const auto counts = detail::largest_remainder<4>(
      {init.x10, init.x20, init.y10, init.z0}, n);
  PopulationState s{counts[0], counts[1], counts[2], counts[3],
                    n, groups[0], groups[1]};
  if (!state_is_valid(s))
    throw ValidationError(ErrorCode::infeasible_rounding,
                          "rounded counts violate group consistency at n=" +
                              std::to_string(n));
  return s;
}

/// Transition rates of the original chain:
///   (lambda p X1 Y1,  alpha Y1 X2,
///    alpha Y1 (N2 - X2) + lambda Y1 (N1 - X1),  lambda (1-p) X1 Y1).
/// All four vanish iff Y1 = 0.
inline std::array<double, 4> rates(const ModelParams& params,
                                   const PopulationState& s) {
  const double x1 = static_cast<double>(s.x1);
  const double x2 = static_cast<double>(s.x2);
  const double y1 = static_cast<double>(s.y1);
  const double n1 = static_cast<double>(s.n1);
  const double n2 = static_cast<double>(s.n2);
  return {params.lambda * params.p * x1 * y1,
          params.alpha * y1 * x2,
          params.alpha * y1 * (n2 - x2) + params.lambda * y1 * (n1 - x1),
          params.lambda * (1.0 - params.p) * x1 * y1};
}

/// Rates of the time-changed chain (clock run at rate 1/Y1). Same jump
/// chain as rates(); the common factor Y1 is dropped.
inline std::array<double, 4> time_changed_rates(const ModelParams& params,
                                                const PopulationState& s) {
  const double x1 = static_cast<double>(s.x1);
  const double x2 = static_cast<double>(s.x2);
  const double n1 = static_cast<double>(s.n1);
  const double n2 = static_cast<double>(s.n2);
  return {params.lambda * params.p * x1,
          params.alpha * x2,
          params.alpha * (n2 - x2) + params.lambda * (n1 - x1),
          params.lambda * (1.0 - params.p) * x1};
}

/// Density-dependent rate family: the time-changed count rates equal
/// N * beta(counts / N).
inline std::array<double, 4> beta(const ModelParams& params, const Density& v) {
  return {params.lambda * params.p * v.x1,
          params.alpha * v.x2,
          params.alpha * (1.0 - params.theta - v.x2) +
              params.lambda * (params.theta - v.x1),
          params.lambda * (1.0 - params.p) * v.x1};
}

/// Jump-chain distribution over the four channels. The original and
/// time-changed chains share it (Y1 cancels); it is computed here from the
/// time-changed weights. Throws once the chain is absorbed (Y1 = 0).
inline std::array<double, 4> jump_probabilities(const ModelParams& params,
                                                const PopulationState& s) {
  if (s.y1 <= 0)
    throw ValidationError(ErrorCode::absorbed_state,
                          "jump probabilities undefined at Y1 = 0");
  const auto w = time_changed_rates(params, s);
  const double total = w[0] + w[1] + w[2] + w[3];
  return {w[0] / total, w[1] / total, w[2] / total, w[3] / total};
}

/// Applies one transition. z and the group sizes track automatically.
inline PopulationState apply(const PopulationState& s, TransitionKind kind) {
  const Increment d = increment(kind);
  PopulationState out = s;
  out.x1 += d.dx1;
  out.x2 += d.dx2;
  out.y1 += d.dy1;
  out.z = s.z + (-d.dx1 - d.dx2 - d.dy1);  // population is closed
  return out;
}

/// Lyapunov potential 2*X1 + X2 + Y1: strictly decreases at every
/// transition, so a trajectory has at most 2N events.
inline std::int64_t potential(const PopulationState& s) {
  return 2 * s.x1 + s.x2 + s.y1;
}

}  // namespace rumor
