#pragma once

// SplitMix64 (Steele, Lea, Flood 2014; the seeding generator of the xoshiro
// family). Chosen for a tiny, fully specified state update that reproduces the
// same stream in any language:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// Reference stream for seed 1234567:
//   6457827717110365317, 3203168211198807973, 9817491932198370423, ...

#include <cstdint>

namespace domset {

class SplitMix64 {
public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() { return next(); }
  std::uint64_t next();

  /// Uniform double in [0, 1) from the top 53 bits.
  double next_unit();
  /// Uniform integer in [0, bound), bound >= 1; rejection sampling, no modulo bias.
  std::uint64_t next_below(std::uint64_t bound);

private:
  std::uint64_t state_;
};

/// Output i (0-based) of SplitMix64(seed), computed in O(1).
/// Per-trial seeds are derived with this so trial t does not depend on how
/// many trials ran before it or in which order.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace domset
