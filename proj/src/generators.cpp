#include "domset/generators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "domset/prng.hpp"

namespace domset {
namespace {

double schedule_value(int gamma, double n) {
  return std::log(n) / std::pow(n, 1.0 / (gamma - 1));
}

}  // namespace

double epsilon_schedule(int gamma, std::size_t n) {
  if (gamma < 2) throw std::invalid_argument("epsilon_schedule: gamma must be >= 2");
  if (n < 2) throw std::invalid_argument("epsilon_schedule: n must be >= 2");
  const double eps = schedule_value(gamma, static_cast<double>(n));
  if (eps < 1.0) return eps;

  // Past its peak at n = e^(gamma-1) the schedule decreases, so the next valid
  // n is found by doubling then bisection.
  std::size_t hi = n;
  while (schedule_value(gamma, static_cast<double>(hi)) >= 1.0) hi *= 2;
  std::size_t lo = n;
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    (schedule_value(gamma, static_cast<double>(mid)) >= 1.0 ? lo : hi) = mid;
  }
  throw std::invalid_argument("epsilon_schedule(" + std::to_string(gamma) + ", " +
                              std::to_string(n) + ") = " + std::to_string(eps) +
                              " is not below 1; smallest valid n above this is " +
                              std::to_string(hi));
}

double markov_epsilon_threshold(int gamma, std::size_t n, double delta) {
  if (gamma < 2) throw std::invalid_argument("markov_epsilon_threshold: gamma must be >= 2");
  if (n < 2) throw std::invalid_argument("markov_epsilon_threshold: n must be >= 2");
  if (!(delta > 0.0)) throw std::invalid_argument("markov_epsilon_threshold: delta must be > 0");
  const double nd = static_cast<double>(n);
  const double eps = std::pow((gamma - 1 + delta) * std::log(nd) / nd, 1.0 / (gamma - 1));
  if (!(eps < 1.0)) {
    throw std::invalid_argument("markov_epsilon_threshold(" + std::to_string(gamma) + ", " +
                                std::to_string(n) + ", " + std::to_string(delta) + ") = " +
                                std::to_string(eps) + " is not below 1");
  }
  return eps;
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("erdos_renyi: p must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(p * static_cast<double>(n) * (n - 1) / 2) + 16);
  for (std::uint32_t u = 0; u < n; ++u) {
    for (std::uint32_t v = u + 1; v < n; ++v) {
      if (rng.next_unit() < p) edges.emplace_back(u, v);
    }
  }
  return Graph::build(n, edges);
}

Graph gjj_gamma3(std::size_t n) {
  if (n % 3 != 0 || n < 9) {
    throw std::invalid_argument("gjj_gamma3: n must be a multiple of 3 and at least 9 (got " +
                                std::to_string(n) + ")");
  }
  const auto third = static_cast<std::uint32_t>(n / 3);
  const auto nn = static_cast<std::uint32_t>(n);
  std::vector<Edge> edges;
  for (std::uint32_t u = 0; u < third; ++u) {
    for (std::uint32_t v = u + 1; v < third; ++v) edges.emplace_back(u, v);
  }
  for (std::uint32_t u = third; u < nn; ++u) {
    for (std::uint32_t v = u + 1; v < nn; ++v) {
      const bool matched = (u - third) % 2 == 0 && v == u + 1;
      if (!matched) edges.emplace_back(u, v);
    }
  }
  return Graph::build(n, edges);
}

}  // namespace domset
