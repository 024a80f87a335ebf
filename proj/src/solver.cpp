#include <algorithm>
#include <bit>
#include <limits>
#include <optional>
#include <vector>

#include "domset/engine.hpp"
#include "domset/kernels.hpp"

namespace domset {
namespace {

using Words = std::vector<std::uint64_t>;

// Decision search: is there a dominating set of at most `budget` vertices?
//
// Each node branches on the uncovered vertex with the fewest non-excluded
// vertices in its closed neighbourhood (lowest index on ties); one of those
// must be in any completion. Siblings tried earlier are excluded from later
// branches, so each candidate set is explored at most once. A node is cut when
// remaining_budget * max_gain < uncovered.
class DecisionSearch {
public:
  explicit DecisionSearch(const Graph& g)
      : g_(g), kt_(kernels::active()), n_(g.order()), words_(g.words_per_row()) {}

  std::optional<std::vector<std::uint32_t>> run(std::size_t budget) {
    chosen_.clear();
    Words uncovered(g_.full_mask().begin(), g_.full_mask().end());
    Words excluded(words_, 0);
    if (search(uncovered, budget, excluded)) return chosen_;
    return std::nullopt;
  }

private:
  static std::size_t popcount(const Words& w) {
    std::size_t total = 0;
    for (std::uint64_t x : w) total += static_cast<std::size_t>(std::popcount(x));
    return total;
  }
  static bool test(const Words& w, std::size_t v) { return (w[v / kWordBits] >> (v % kWordBits)) & 1u; }
  static void set(Words& w, std::size_t v) { w[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits); }

  bool search(const Words& uncovered, std::size_t budget, const Words& excluded_in) {
    const std::size_t remaining = popcount(uncovered);
    if (remaining == 0) return true;
    if (budget == 0) return false;

    if (budget == 1) {
      // Exclusions can be ignored at a leaf: any hit is still a valid cover.
      std::vector<kernels::MaskedWord> missing;
      for (std::size_t w = 0; w < words_; ++w) {
        if (uncovered[w] != 0) missing.push_back({static_cast<std::uint32_t>(w), uncovered[w]});
      }
      if (kt_.count_covering(g_.columns().data(), n_, missing, 0, n_) == 0) return false;
      for (std::uint32_t v = 0; v < n_; ++v) {
        if (kt_.count_covering(g_.columns().data(), n_, missing, v, v + 1) == 1) {
          chosen_.push_back(v);
          return true;
        }
      }
      return false;
    }

    std::uint64_t max_gain = 0;
    for (std::uint32_t v = 0; v < n_; ++v) {
      if (test(excluded_in, v)) continue;
      max_gain = std::max(max_gain, kt_.popcount_and(g_.row(v).data(), uncovered.data(), words_));
    }
    if (budget * max_gain < remaining) return false;

    std::uint32_t branch = 0;
    std::uint64_t fewest = std::numeric_limits<std::uint64_t>::max();
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = uncovered[w]; bits != 0; bits &= bits - 1) {
        const auto u = static_cast<std::uint32_t>(w * kWordBits + std::countr_zero(bits));
        const std::uint64_t options = kt_.popcount_andnot(g_.row(u).data(), excluded_in.data(), words_);
        if (options < fewest) {
          fewest = options;
          branch = u;
        }
      }
    }
    if (fewest == 0) return false;

    Words excluded = excluded_in;
    Words next(words_);
    const auto row = g_.row(branch);
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = row[w] & ~excluded_in[w]; bits != 0; bits &= bits - 1) {
        const auto v = static_cast<std::uint32_t>(w * kWordBits + std::countr_zero(bits));
        const auto nv = g_.row(v);
        for (std::size_t i = 0; i < words_; ++i) next[i] = uncovered[i] & ~nv[i];
        chosen_.push_back(v);
        if (search(next, budget - 1, excluded)) return true;
        chosen_.pop_back();
        set(excluded, v);
      }
    }
    return false;
  }

  const Graph& g_;
  const kernels::KernelTable& kt_;
  std::size_t n_;
  std::size_t words_;
  std::vector<std::uint32_t> chosen_;
};

}  // namespace

VertexSet greedy_dominating_set(const Graph& g) {
  const auto& kt = kernels::active();
  const std::size_t words = g.words_per_row();
  std::vector<std::uint64_t> uncovered(g.full_mask().begin(), g.full_mask().end());
  VertexSet picked(g.order());
  auto left = [&] { return kt.popcount_and(uncovered.data(), g.full_mask().data(), words); };
  while (left() != 0) {
    std::uint32_t best = 0;
    std::uint64_t best_gain = 0;
    for (std::uint32_t v = 0; v < g.order(); ++v) {
      const std::uint64_t gain = kt.popcount_and(g.row(v).data(), uncovered.data(), words);
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    picked.insert(best);
    const auto r = g.row(best);
    for (std::size_t w = 0; w < words; ++w) uncovered[w] &= ~r[w];
  }
  return picked;
}

bool has_dominating_set_of_size(const Graph& g, std::size_t k) {
  if (k >= g.order()) return true;
  return DecisionSearch(g).run(k).has_value();
}

VertexSet minimum_dominating_set(const Graph& g) {
  VertexSet best = greedy_dominating_set(g);
  DecisionSearch search(g);
  while (best.size() > 1) {
    auto found = search.run(best.size() - 1);
    if (!found) break;
    best = VertexSet(g.order(), *found);
  }
  return best;
}

std::size_t domination_number(const Graph& g) { return minimum_dominating_set(g).size(); }

}  // namespace domset
