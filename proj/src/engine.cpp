#include "domset/engine.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "domset/kernels.hpp"
#include "domset/prng.hpp"

namespace domset {

BudgetExceeded::BudgetExceeded(std::uint64_t budget, const BigInt& combinations, std::size_t k)
    : std::runtime_error("exact count needs C(n,k)*k = " + to_decimal(combinations) + "*" +
                         std::to_string(k) + " word operations, over the work budget of " +
                         std::to_string(budget)),
      budget_(budget) {}

namespace {

double ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) return 0.0;
  // Both fit comfortably in long double range for every n <= 4096 we count.
  return static_cast<double>(static_cast<long double>(num) / static_cast<long double>(den));
}

/// Enumerates k-combinations in lexicographic order, one subtree per first
/// vertex, carrying the union of closed neighbourhoods down the prefix.
class PrefixEnumerator {
public:
  PrefixEnumerator(const Graph& g, std::size_t k)
      : g_(g), kt_(kernels::active()), n_(g.order()), words_(g.words_per_row()), k_(k) {
    std::vector<std::size_t> sizes(n_);
    for (std::uint32_t v = 0; v < n_; ++v) sizes[v] = g.degree(v) + 1;
    std::sort(sizes.begin(), sizes.end(), std::greater<>());
    top_sum_.assign(k_ + 1, 0);
    for (std::size_t r = 1; r <= k_; ++r) top_sum_[r] = top_sum_[r - 1] + sizes[r - 1];
  }

  /// Dominating k-sets whose smallest vertex is `first`.
  std::uint64_t count_subtree(std::uint32_t first) const {
    std::vector<std::uint64_t> unions(k_ * words_, 0);
    std::vector<kernels::MaskedWord> missing;
    missing.reserve(words_);
    const auto r0 = g_.row(first);
    std::copy(r0.begin(), r0.end(), unions.begin());
    return descend(1, first, unions, missing);
  }

private:
  std::uint64_t descend(std::size_t depth, std::uint32_t last, std::vector<std::uint64_t>& unions,
                        std::vector<kernels::MaskedWord>& missing) const {
    const std::uint64_t* covered = unions.data() + (depth - 1) * words_;
    const std::size_t remaining = k_ - depth;
    const auto full = g_.full_mask();

    missing.clear();
    std::size_t uncovered = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      const std::uint64_t m = full[w] & ~covered[w];
      if (m != 0) {
        missing.push_back({static_cast<std::uint32_t>(w), m});
        uncovered += static_cast<std::size_t>(std::popcount(m));
      }
    }
    if (remaining == 1) {
      return kt_.count_covering(g_.columns().data(), n_, missing, last + 1, n_);
    }
    const std::size_t tail = n_ - 1 - last;
    if (uncovered == 0) return binomial_saturating(tail, remaining);
    if (uncovered > top_sum_[remaining]) return 0;

    std::uint64_t total = 0;
    std::uint64_t* next = unions.data() + depth * words_;
    for (std::size_t v = last + 1; v + remaining <= n_; ++v) {
      std::copy(covered, covered + words_, next);
      kt_.or_accumulate(next, g_.row(static_cast<std::uint32_t>(v)).data(), words_);
      total += descend(depth + 1, static_cast<std::uint32_t>(v), unions, missing);
    }
    return total;
  }

  const Graph& g_;
  const kernels::KernelTable& kt_;
  std::size_t n_;
  std::size_t words_;
  std::size_t k_;
  std::vector<std::size_t> top_sum_;  // top_sum_[r]: r largest closed-neighbourhood sizes
};

}  // namespace

DominationCount count_dominating_exact(const Graph& g, std::size_t k, const CountOptions& options) {
  const std::size_t n = g.order();
  if (k > n) {
    throw std::invalid_argument("set size k=" + std::to_string(k) + " exceeds n=" +
                                std::to_string(n));
  }
  DominationCount result;
  result.k = k;
  result.total = binomial(n, k);
  if (result.total * k > options.work_budget) {
    throw BudgetExceeded(options.work_budget, result.total, k);
  }

  if (k == 0) {
    result.dominating = 0;
  } else if (k == n) {
    result.dominating = 1;
  } else if (k == 1) {
    std::vector<kernels::MaskedWord> missing;
    const auto full = g.full_mask();
    for (std::size_t w = 0; w < full.size(); ++w) {
      missing.push_back({static_cast<std::uint32_t>(w), full[w]});
    }
    result.dominating = kernels::active().count_covering(g.columns().data(), n, missing, 0, n);
  } else {
    const PrefixEnumerator enumerator(g, k);
    const std::size_t tasks = n - k + 1;
    std::vector<std::uint64_t> per_task(tasks, 0);
    unsigned workers = options.workers != 0 ? options.workers : std::thread::hardware_concurrency();
    workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(tasks)));

    std::atomic<std::size_t> next_task{0};
    auto work = [&] {
      for (std::size_t t; (t = next_task.fetch_add(1, std::memory_order_relaxed)) < tasks;) {
        per_task[t] = enumerator.count_subtree(static_cast<std::uint32_t>(t));
      }
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (unsigned i = 0; i < workers; ++i) pool.emplace_back(work);
    }
    BigInt sum = 0;
    for (std::uint64_t c : per_task) sum += c;
    result.dominating = sum;
  }
  result.non_dominating = result.total - result.dominating;
  result.fraction = ratio(result.dominating, result.total);
  return result;
}

FractionEstimate estimate_dominating_fraction(const Graph& g, std::size_t k, std::uint64_t trials,
                                              std::uint64_t seed) {
  if (trials == 0) throw std::invalid_argument("trials must be >= 1");
  const std::size_t n = g.order();
  if (k < 1 || k > n) {
    throw std::invalid_argument("set size k=" + std::to_string(k) + " outside [1, n]");
  }
  const auto& kt = kernels::active();
  const std::size_t words = g.words_per_row();
  std::vector<std::uint64_t> covered(words);
  std::vector<std::uint64_t> picked(words);

  std::uint64_t hits = 0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    SplitMix64 rng(derive_seed(seed, t));
    std::fill(picked.begin(), picked.end(), 0);
    std::fill(covered.begin(), covered.end(), 0);
    // Floyd: uniform k-subset of [0, n) with exactly k draws.
    for (std::size_t j = n - k; j < n; ++j) {
      std::size_t v = static_cast<std::size_t>(rng.next_below(j + 1));
      if ((picked[v / kWordBits] >> (v % kWordBits)) & 1u) v = j;
      picked[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
      kt.or_accumulate(covered.data(), g.row(static_cast<std::uint32_t>(v)).data(), words);
    }
    if (kt.popcount_andnot(g.full_mask().data(), covered.data(), words) == 0) ++hits;
  }

  constexpr double kZ99 = 2.5758293035489004;
  FractionEstimate est;
  est.trials = trials;
  est.seed = seed;
  est.point = static_cast<double>(hits) / static_cast<double>(trials);
  est.half_width = kZ99 * std::sqrt(est.point * (1.0 - est.point) / static_cast<double>(trials));
  return est;
}

BigInt row_zero_lower_bound(const Graph& g, std::size_t m) {
  if (m > g.order()) {
    throw std::invalid_argument("set size m=" + std::to_string(m) + " exceeds n=" +
                                std::to_string(g.order()));
  }
  return binomial(row_zero_profile(g).z_max, m);
}

}  // namespace domset
