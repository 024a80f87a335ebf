#include <doctest.h>

#include <cmath>
#include <string>
#include <vector>

#include "domset/engine.hpp"
#include "domset/generators.hpp"
#include "domset/oracle.hpp"
#include "domset/prng.hpp"

using namespace domset;
using doctest::Approx;

TEST_CASE("SplitMix64 reference stream") {
  SplitMix64 rng(1234567);
  CHECK(rng.next() == 6457827717110365317ULL);
  CHECK(rng.next() == 3203168211198807973ULL);
  CHECK(rng.next() == 9817491932198370423ULL);
  CHECK(rng.next() == 4593380528125082431ULL);
  CHECK(rng.next() == 16408922859458223821ULL);

  SplitMix64 zero(0);
  CHECK(zero.next() == 16294208416658607535ULL);
  CHECK(zero.next() == 7960286522194355700ULL);
}

TEST_CASE("derive_seed is random access into the stream") {
  SplitMix64 rng(42);
  for (std::uint64_t i = 0; i < 50; ++i) CHECK(derive_seed(42, i) == rng.next());
}

TEST_CASE("next_below stays in range and hits every value") {
  SplitMix64 rng(3);
  std::vector<int> hits(7, 0);
  for (int i = 0; i < 7000; ++i) ++hits[rng.next_below(7)];
  for (int h : hits) CHECK(h > 800);
  CHECK(rng.next_below(1) == 0);
}

TEST_CASE("epsilon_schedule examples") {
  CHECK(epsilon_schedule(3, 100) == Approx(0.46051701859880917).epsilon(1e-12));
  CHECK(epsilon_schedule(2, 100) == Approx(0.04605170185988092).epsilon(1e-12));
  CHECK_THROWS_AS(epsilon_schedule(4, 10), std::invalid_argument);
  CHECK_THROWS_AS(epsilon_schedule(1, 100), std::invalid_argument);
  try {
    epsilon_schedule(4, 10);
  } catch (const std::invalid_argument& e) {
    // ln(n)/n^(1/3) first drops below 1 again at n = 94.
    CHECK(std::string(e.what()).find("94") != std::string::npos);
  }
  CHECK(epsilon_schedule(4, 94) < 1.0);
  CHECK(std::log(93.0) / std::cbrt(93.0) >= 1.0);
}

TEST_CASE("markov_epsilon_threshold examples") {
  CHECK(markov_epsilon_threshold(2, 1000, 1.0) == Approx(0.013815510557964273).epsilon(1e-12));
  CHECK(markov_epsilon_threshold(3, 10000, 0.5) == Approx(0.04798525912188082).epsilon(1e-12));
  CHECK(markov_epsilon_threshold(2, 3, 0.1) == Approx(0.4028245058449736).epsilon(1e-12));
  CHECK_THROWS_AS(markov_epsilon_threshold(2, 3, 2.0), std::invalid_argument);  // 3 ln3/3 > 1
  CHECK_THROWS_AS(markov_epsilon_threshold(2, 100, 0.0), std::invalid_argument);
}

TEST_CASE("schedule vs first-moment threshold at finite n") {
  for (double n : {1e3, 1e4, 1e5}) {
    const auto nn = static_cast<std::size_t>(n);
    CHECK(epsilon_schedule(3, nn) >= markov_epsilon_threshold(3, nn, 0.5));
    // At gamma = 2 the schedule is exactly 1/(1+delta) of the threshold.
    CHECK(epsilon_schedule(2, nn) / markov_epsilon_threshold(2, nn, 0.5) ==
          Approx(1.0 / 1.5).epsilon(1e-12));
  }
}

TEST_CASE("erdos_renyi extremes and determinism") {
  const Graph k5 = erdos_renyi(5, 1.0, 123);
  CHECK(k5.edge_count() == 10);
  CHECK(erdos_renyi(5, 0.0, 123).edge_count() == 0);
  CHECK(to_edge_list(erdos_renyi(50, 0.5, 42)) == to_edge_list(erdos_renyi(50, 0.5, 42)));
  CHECK(to_edge_list(erdos_renyi(50, 0.5, 42)) != to_edge_list(erdos_renyi(50, 0.5, 43)));
  CHECK_THROWS_AS(erdos_renyi(5, 1.5, 0), std::invalid_argument);
  CHECK_THROWS_AS(erdos_renyi(5, -0.1, 0), std::invalid_argument);
}

TEST_CASE("erdos_renyi follows the documented stream") {
  // Re-derive the edge set directly from SplitMix64.
  SplitMix64 rng(9);
  std::vector<Edge> expected;
  for (std::uint32_t u = 0; u < 12; ++u) {
    for (std::uint32_t v = u + 1; v < 12; ++v) {
      if (static_cast<double>(rng.next() >> 11) * 0x1.0p-53 < 0.3) expected.emplace_back(u, v);
    }
  }
  CHECK(erdos_renyi(12, 0.3, 9).edges() == expected);
}

TEST_CASE("erdos_renyi edge count mean") {
  const std::size_t n = 40;
  const double p = 0.35;
  const double pairs = n * (n - 1) / 2.0;
  const int graphs = 400;
  double sum = 0;
  for (int s = 0; s < graphs; ++s) sum += static_cast<double>(erdos_renyi(n, p, derive_seed(77, s)).edge_count());
  const double mean = sum / graphs;
  const double sd_of_mean = std::sqrt(pairs * p * (1 - p) / graphs);
  CHECK(std::abs(mean - p * pairs) <= 4 * sd_of_mean);
}

TEST_CASE("gjj_gamma3 structure") {
  const Graph g = gjj_gamma3(9);
  CHECK(g.edge_count() == 15);
  for (std::size_t n : {9, 12, 30, 60}) {
    const Graph h = gjj_gamma3(n);
    const std::size_t third = n / 3;
    CHECK(h.edge_count() == third * (third - 1) / 2 + (2 * third) * (2 * third - 1) / 2 - third);
  }
  CHECK_THROWS_AS(gjj_gamma3(10), std::invalid_argument);
  CHECK_THROWS_AS(gjj_gamma3(6), std::invalid_argument);
  CHECK(domination_number(g) == 3);
  CHECK(count_dominating_exact(g, 3).dominating == 45);
}

TEST_CASE("gjj dominating triples take one clique vertex and two from the other side") {
  for (std::size_t n : {9, 12, 15}) {
    const Graph g = gjj_gamma3(n);
    const std::uint32_t third = static_cast<std::uint32_t>(n / 3);
    std::uint64_t dominating = 0;
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = a + 1; b < n; ++b) {
        for (std::uint32_t c = b + 1; c < n; ++c) {
          const std::vector<std::uint32_t> s{a, b, c};
          if (!is_dominating(g, VertexSet(n, s))) continue;
          ++dominating;
          const int in_clique = (a < third) + (b < third) + (c < third);
          CHECK(in_clique == 1);
        }
      }
    }
    CHECK(dominating == third * (2 * third) * (2 * third - 1) / 2);
  }
}

TEST_CASE("gjj_gamma3 at n = 300") {
  const auto c = count_dominating_exact(gjj_gamma3(300), 3);
  CHECK(c.dominating == 1'990'000);
  CHECK(c.total == 4'455'100);
  CHECK(std::abs(c.fraction - 4.0 / 9.0) <= 0.0023);
}
