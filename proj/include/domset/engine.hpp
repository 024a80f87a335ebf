#pragma once

// Exact domination number, exact and sampled counts of dominating k-sets, and
// the row-zero lower bound on non-dominating m-sets.

#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "domset/bigint.hpp"
#include "domset/graph.hpp"

namespace domset {

struct DominationCount {
  std::size_t k = 0;
  BigInt total;           // C(n, k)
  BigInt dominating;      // X_k
  BigInt non_dominating;  // total - dominating
  double fraction = 0.0;  // dominating / total
};

struct FractionEstimate {
  double point = 0.0;
  double half_width = 0.0;  // two-sided 99% normal-approximation interval
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
};

class BudgetExceeded : public std::runtime_error {
public:
  BudgetExceeded(std::uint64_t budget, const BigInt& combinations, std::size_t k);

  std::uint64_t budget() const { return budget_; }

private:
  std::uint64_t budget_;
};

inline constexpr std::uint64_t kDefaultWorkBudget = 1'000'000'000ULL;

struct CountOptions {
  /// Upper limit on C(n,k) * k; exceeding it throws BudgetExceeded.
  std::uint64_t work_budget = kDefaultWorkBudget;
  /// 0 = std::thread::hardware_concurrency().
  unsigned workers = 0;
};

/// Smallest k such that some k-set dominates. Branch and bound: greedy cover
/// for an upper bound, then decision searches at decreasing k.
std::size_t domination_number(const Graph& g);

/// A dominating set of size domination_number(g).
VertexSet minimum_dominating_set(const Graph& g);

/// Greedy cover (max new coverage, lowest index on ties).
VertexSet greedy_dominating_set(const Graph& g);

/// True iff some set of at most k vertices dominates g.
bool has_dominating_set_of_size(const Graph& g, std::size_t k);

/// Exact count of dominating k-subsets. The empty set never dominates (n >= 1).
DominationCount count_dominating_exact(const Graph& g, std::size_t k,
                                       const CountOptions& options = {});

/// Monte Carlo estimate of the dominating fraction among k-subsets. Trial t
/// draws a uniform k-subset (Floyd's algorithm) from SplitMix64(derive_seed(seed, t)).
FractionEstimate estimate_dominating_fraction(const Graph& g, std::size_t k,
                                              std::uint64_t trials, std::uint64_t seed);

/// C(z_max, m): every m-subset of the zero columns of the worst row leaves
/// that row's vertex undominated.
BigInt row_zero_lower_bound(const Graph& g, std::size_t m);

}  // namespace domset
