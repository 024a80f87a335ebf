#include "domset/oracle.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace domset::oracle {
namespace {

using Matrix = std::vector<std::vector<bool>>;

Matrix adjacency_of(const Graph& g) {
  Matrix adj(g.order(), std::vector<bool>(g.order(), false));
  for (const auto& [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  return adj;
}

// Every vertex outside S has a neighbour in S.
bool dominates(const Matrix& adj, const std::vector<std::size_t>& s) {
  const std::size_t n = adj.size();
  std::vector<bool> in_s(n, false);
  for (std::size_t v : s) in_s[v] = true;
  for (std::size_t x = 0; x < n; ++x) {
    if (in_s[x]) continue;
    bool has_neighbour = false;
    for (std::size_t v : s) {
      if (adj[x][v]) {
        has_neighbour = true;
        break;
      }
    }
    if (!has_neighbour) return false;
  }
  return true;
}

// Calls visit(subset) for each k-subset of [0, n) in lexicographic order.
template <typename Visit>
void for_each_subset(std::size_t n, std::size_t k, Visit&& visit) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    visit(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t count_by_definition(const Matrix& adj, std::size_t k) {
  // The empty set dominates nothing once n >= 1.
  if (k == 0) return 0;
  std::uint64_t count = 0;
  for_each_subset(adj.size(), k, [&](const std::vector<std::size_t>& s) {
    if (dominates(adj, s)) ++count;
  });
  return count;
}

}  // namespace

OracleResult brute_expectation(std::size_t n, int gamma, double epsilon) {
  if (n < 1 || n > kMaxOracleVertices) {
    throw std::invalid_argument("brute_expectation supports 1 <= n <= 6 (got " +
                                std::to_string(n) + ")");
  }
  if (gamma < 1 || static_cast<std::size_t>(gamma) > n) {
    throw std::invalid_argument("brute_expectation requires 1 <= gamma <= n");
  }
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("brute_expectation requires epsilon in [0, 1]");
  }

  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  const std::size_t slots = pairs.size();

  OracleResult out;
  out.n = n;
  out.gamma = gamma;
  out.epsilon = epsilon;
  out.graphs_enumerated = std::uint64_t{1} << slots;

  for (std::uint64_t code = 0; code < out.graphs_enumerated; ++code) {
    Matrix adj(n, std::vector<bool>(n, false));
    std::size_t present = 0;
    for (std::size_t e = 0; e < slots; ++e) {
      if ((code >> e) & 1u) {
        adj[pairs[e].first][pairs[e].second] = adj[pairs[e].second][pairs[e].first] = true;
        ++present;
      }
    }
    const double weight = std::pow(1.0 - epsilon, static_cast<double>(present)) *
                          std::pow(epsilon, static_cast<double>(slots - present));
    const auto x = static_cast<double>(count_by_definition(adj, static_cast<std::size_t>(gamma)));
    out.weight_sum += weight;
    out.expectation += weight * x;
    out.second_moment += weight * x * x;
  }
  return out;
}

std::size_t naive_domination_number(const Graph& g) {
  if (g.order() > kMaxNaiveDominationVertices) {
    throw std::invalid_argument("naive_domination_number supports n <= 16 (got " +
                                std::to_string(g.order()) + ")");
  }
  const Matrix adj = adjacency_of(g);
  for (std::size_t k = 1; k <= g.order(); ++k) {
    bool found = false;
    for_each_subset(g.order(), k, [&](const std::vector<std::size_t>& s) {
      if (!found && dominates(adj, s)) found = true;
    });
    if (found) return k;
  }
  return g.order();
}

BigInt naive_count(const Graph& g, std::size_t k) {
  if (k > g.order()) throw std::invalid_argument("naive_count requires k <= n");
  const BigInt combos = binomial(g.order(), k);
  if (combos > kMaxNaiveCombinations) {
    throw std::invalid_argument("naive_count: C(n,k) = " + combos.str() +
                                " exceeds the 10^6 work bound");
  }
  return count_by_definition(adjacency_of(g), k);
}

}  // namespace domset::oracle
