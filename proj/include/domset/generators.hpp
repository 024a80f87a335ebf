#pragma once

// Seeded Erdos-Renyi graphs, the edge-absence schedules used to pick their
// density, and the K_{n/3} + (K_{2n/3} minus a perfect matching) construction
// with domination number 3.

#include <cstddef>
#include <cstdint>

#include "domset/graph.hpp"

namespace domset {

struct EnsembleParams {
  int gamma_target = 2;
  std::size_t n = 0;
  double delta = 1.0;
  double epsilon = 0.5;
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;

  double p() const { return 1.0 - epsilon; }
};

/// ln(n) / n^(1/(gamma-1)). Throws std::invalid_argument for gamma < 2, n < 2,
/// or when the value is >= 1 (the message names the next n where it drops below 1).
double epsilon_schedule(int gamma, std::size_t n);

/// ((gamma-1+delta) * ln(n) / n)^(1/(gamma-1)): smallest edge-absence
/// probability for which the first-moment bound on dominating (gamma-1)-sets
/// still vanishes. Throws std::invalid_argument when the result is >= 1.
double markov_epsilon_threshold(int gamma, std::size_t n, double delta);

/// G(n, p). Pairs (u, v), u < v, are visited in lexicographic order and each
/// draws one SplitMix64(seed) output: the edge is present iff
/// (x >> 11) * 2^-53 < p.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// K_{n/3} on [0, n/3) plus K_{2n/3} on [n/3, n) with the matching
/// (n/3+2i, n/3+2i+1) removed. Requires n % 3 == 0 and n >= 9.
Graph gjj_gamma3(std::size_t n);

}  // namespace domset
