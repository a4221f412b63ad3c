#pragma once

#include <cmath>
#include <cstdint>

namespace rumor {

namespace detail {

// SplitMix64 output mixer (Steele/Lea/Flood; Vigna's reference constants).
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden64 = 0x9E3779B97F4A7C15ULL;

}  // namespace detail

/// SplitMix64: a 64-bit splittable generator. Small state, fully
/// portable output, passes BigCrush; one independent stream per
/// simulation run.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    return detail::mix64(state_ += detail::kGolden64);
  }

  /// Uniform on [0, 1), 53 random bits.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  /// Uniform on (0, 1): endpoints excluded, safe under log().
  double next_open() {
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Exponential waiting time with the given rate; strictly positive.
  double next_exponential(double rate) {
    return -std::log(next_open()) / rate;
  }

 private:
  std::uint64_t state_;
};

/// Deterministic per-run seed: the (master, index) pair is folded through
/// the SplitMix64 mixer, so run streams are unrelated and the ensemble is
/// reproducible for any worker count or scheduling order.
inline constexpr std::uint64_t derive_run_seed(std::uint64_t master_seed,
                                               std::uint64_t run_index) {
  return detail::mix64(master_seed ^ (detail::kGolden64 * (run_index + 1)));
}

}  // namespace rumor
