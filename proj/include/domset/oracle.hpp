#pragma once

// Brute-force ground truth. Nothing here touches the bitmask rows or the
// kernels: graphs are re-read into a plain adjacency matrix and domination is
// checked vertex by vertex from the definition.

#include <cstddef>
#include <cstdint>

#include "domset/bigint.hpp"
#include "domset/graph.hpp"

namespace domset::oracle {

struct OracleResult {
  std::size_t n = 0;
  int gamma = 0;
  double epsilon = 0.0;
  double expectation = 0.0;     // sum over graphs of weight * X_gamma
  double second_moment = 0.0;   // sum over graphs of weight * X_gamma^2
  double weight_sum = 0.0;
  std::uint64_t graphs_enumerated = 0;  // 2^(n(n-1)/2)
};

inline constexpr std::size_t kMaxOracleVertices = 6;
inline constexpr std::size_t kMaxNaiveDominationVertices = 16;
inline constexpr std::uint64_t kMaxNaiveCombinations = 1'000'000;

/// Enumerates every labelled graph on n <= 6 vertices with weight
/// eps^(missing edges) * (1-eps)^(present edges).
OracleResult brute_expectation(std::size_t n, int gamma, double epsilon);

/// Smallest k for which some k-subset dominates, by exhaustive search (n <= 16).
std::size_t naive_domination_number(const Graph& g);

/// Number of dominating k-subsets, no pruning. Requires C(n,k) <= 10^6.
BigInt naive_count(const Graph& g, std::size_t k);

}  // namespace domset::oracle
