#include <doctest.h>

#include <cmath>

#include "domset/moments.hpp"
#include "domset/oracle.hpp"

using namespace domset;
using doctest::Approx;

namespace {

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST_CASE("expected_count examples") {
  CHECK(expected_count(20, 2, 0.2) == Approx(91.12463372079797).epsilon(1e-12));
  CHECK(expected_count(4, 2, 0.3) == Approx(4.9686).epsilon(1e-12));
  CHECK(expected_count(30, 3, 0.0) == 4060.0);
  CHECK(expected_count(5, 2, 1.0) == 0.0);
  CHECK(expected_count(3, 3, 1.0) == 1.0);  // the full set always dominates
  // log-space path stays finite where the direct product underflows
  CHECK(expected_count(1'000'000, 2, 0.5) == 0.0);
  CHECK(std::isfinite(expected_count(1'000'000, 3, 1e-3)));
}

TEST_CASE("markov_tail examples") {
  CHECK(markov_tail(100, 2, 0.2).uncapped == Approx(2.5462949704181216e-08).epsilon(1e-10));
  const double eps = 2 * std::log(1000.0) / 1000;
  const auto m = markov_tail(1000, 2, eps);
  CHECK(m.uncapped == Approx(0.000920893832306096).epsilon(1e-9));
  CHECK(m.bound == m.uncapped);
  CHECK(markov_tail(10, 3, 1.0).uncapped == 0.0);
  CHECK(markov_tail(4, 2, 0.3).bound == 1.0);
  CHECK_THROWS_AS(markov_tail(10, 1, 0.5), std::invalid_argument);
}

TEST_CASE("pair_joint_probability examples") {
  CHECK(pair_joint_probability(1, 0, 0.25, 2) == Approx(0.75).epsilon(1e-15));
  CHECK(pair_joint_probability(2, 2, 0.1, 10) == Approx(std::pow(0.99, 8)).epsilon(1e-14));
  CHECK_THROWS_AS(pair_joint_probability(3, 0, 0.1, 5), std::invalid_argument);  // 2*gamma > n
  CHECK_THROWS_AS(pair_joint_probability(2, 3, 0.1, 10), std::invalid_argument);
}

TEST_CASE("mutual polynomial leading coefficients") {
  for (int g : {3, 4, 5}) {
    const auto poly = mutual_polynomial(g, 0);
    CHECK(poly.at(0) == 1);
    CHECK(poly.at(g) == -2 * g);
    CHECK(poly.at(2 * g - 1) == g * g);
    CHECK(poly.at(2 * g) == g * g - g);
    CHECK(poly.begin()->first == 0);
    CHECK(std::next(poly.begin())->first == g);  // nothing between 0 and gamma
  }
  // gamma = 2: i=1,j=2 and i=2,j=2 also land on eps^4, so the full coefficient is -1.
  // Two disjoint pairs dominate each other iff K_{2,2} keeps no isolated vertex:
  // 1 - 4e^2 + 4e^3 - e^4, which vanishes at e = 1.
  CHECK(mutual_polynomial(2, 0) == std::map<int, std::int64_t>{{0, 1}, {2, -4}, {3, 4}, {4, -1}});
  for (int g : {2, 3, 4, 5}) {
    const auto pairwise = mutual_polynomial(g, 0, 2);
    CHECK(pairwise.at(g) == -2 * g);
    CHECK(pairwise.at(2 * g - 1) == g * g);
    CHECK(pairwise.at(2 * g) == g * g - g);
  }

  // r = gamma: nothing left to dominate across the two sets
  CHECK(mutual_polynomial(3, 3) == std::map<int, std::int64_t>{{0, 1}});
}

TEST_CASE("mutual polynomial evaluates to the probability") {
  for (int g = 1; g <= 4; ++g) {
    for (int r = 0; r <= g; ++r) {
      for (double eps : {0.05, 0.3, 0.8}) {
        double value = 0;
        for (const auto& [e, c] : mutual_polynomial(g, r)) value += c * std::pow(eps, e);
        // n = 2g - r: no outside vertices, so the pair probability is P_mutual alone
        CHECK(pair_joint_probability(g, r, eps, 2 * g - r) == Approx(value).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("second moment and variance examples") {
  CHECK(second_moment_exact(2, 1, 0.5) == Approx(2.0).epsilon(1e-15));
  CHECK(variance_exact(2, 1, 0.5).value == Approx(1.0).epsilon(1e-15));

  // eps = 0: X is constant C(n, gamma)
  CHECK(second_moment_exact(10, 3, 0.0) == 120.0 * 120.0);
  CHECK(variance_exact(10, 3, 0.0).value == 0.0);

  const auto o = oracle::brute_expectation(4, 2, 0.3);
  CHECK(rel(second_moment_exact(4, 2, 0.3), o.second_moment) <= 1e-9);
  CHECK(rel(variance_exact(4, 2, 0.3).value, o.second_moment - o.expectation * o.expectation) <= 1e-9);
}

TEST_CASE("r = gamma term equals the first moment") {
  for (std::size_t n : {6, 20, 100}) {
    for (int g : {1, 2, 3}) {
      for (double eps : {0.1, 0.4}) {
        const double term = expected_count(n, g, eps) * 1.0;  // C(gamma,gamma) C(n-gamma,0) = 1
        const double pair = pair_joint_probability(g, g, eps, n);
        CHECK(pair == Approx(std::pow(1 - std::pow(eps, g), double(n) - g)).epsilon(1e-12));
        CHECK(term == Approx(std::exp(log_binomial(double(n), g)) * pair).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("variance is non-negative and consistent") {
  for (std::size_t n : {5, 12, 50, 250, 1000}) {
    for (int g : {1, 2, 3}) {
      for (double eps : {1e-6, 0.01, 0.1, 0.3, 0.6, 0.95}) {
        if (std::size_t(g) > n) continue;
        const auto v = variance_exact(n, g, eps);
        CHECK(v.value >= 0.0);
        const double e = expected_count(n, g, eps);
        const double m2 = second_moment_exact(n, g, eps);
        CHECK(m2 >= e * e * (1 - 1e-12));
        // E(X^2) - E(X)^2 agrees with the centred sum wherever the subtraction is well-conditioned
        if (v.value > 1e-6 * m2) CHECK(rel(v.value, m2 - e * e) <= 1e-6);
      }
    }
  }
}

TEST_CASE("chebyshev_tail") {
  CHECK(chebyshev_tail(10, 2, 0.0, 2.0) == 0.0);
  const double phi = std::log(100.0);
  const double t = chebyshev_tail(100, 2, 0.046, phi);
  CHECK(t == Approx(variance_exact(100, 2, 0.046).value / std::pow(phi * std::pow(100.0, 1.5), 2))
                 .epsilon(1e-12));
  CHECK(t < 1.0);
  CHECK(chebyshev_tail(100, 2, 0.046, 2 * phi) == t / 4);
  CHECK_THROWS_AS(chebyshev_tail(100, 2, 0.046, 0.0), std::invalid_argument);
}

TEST_CASE("moment_report bundles the pieces") {
  const auto m = moment_report(50, 2, 0.1);
  REQUIRE(m.markov.has_value());
  CHECK(m.expected == expected_count(50, 2, 0.1));
  CHECK(m.expected_fraction >= 0.0);
  CHECK(m.expected_fraction <= 1.0);
  CHECK(m.chebyshev_tail(3.0) == chebyshev_tail(50, 2, 0.1, 3.0));
  CHECK_FALSE(moment_report(5, 1, 0.5).markov.has_value());
}

TEST_CASE("cor24_lower_bound") {
  CHECK(cor24_lower_bound(1e4, 3) == Approx(166666.66666666666).epsilon(1e-12));
  CHECK(cor24_lower_bound(1, 3) == Approx(1.0 / 6).epsilon(1e-15));
  CHECK_THROWS_AS(cor24_lower_bound(100, 2), std::invalid_argument);
}

TEST_CASE("cor32_bracket") {
  const auto b = cor32_bracket(10'000, 3);
  CHECK(b.total == binomial(10'000, 3));
  CHECK(b.upper_defect == Approx(1e6 / 6).epsilon(1e-12));
  CHECK(b.lower_defect == Approx(7813165794406.951).epsilon(1e-10));
  CHECK(b.upper_defect <= b.lower_defect);
  CHECK(b.defect_crossover_n <= 10'000);
  CHECK_THROWS_AS(cor32_bracket(100, 2), std::invalid_argument);

  double prev = 1.0;
  for (std::size_t n : {1'000, 10'000, 100'000}) {
    const auto br = cor32_bracket(n, 3);
    const double ratio = br.upper_defect / static_cast<double>(br.total);
    CHECK(ratio < prev);
    prev = ratio;
    CHECK(n >= br.defect_crossover_n);
    CHECK(br.upper_defect <= br.lower_defect);
  }
  for (int g : {3, 4, 5}) {
    const auto br = cor32_bracket(200, g);
    for (std::size_t n = br.total_threshold_n; n < br.total_threshold_n + 50; ++n) {
      CHECK(cor24_lower_bound(double(n), g) < static_cast<double>(binomial(n, g)));
    }
  }
}

TEST_CASE("eq1_max_a") {
  const auto big = eq1_max_a(1'000'000, 2);
  REQUIRE(big.a_star.has_value());
  CHECK(*big.a_star == 1000);
  CHECK(big.witness_holds);
  CHECK(big.witness_target == Approx(1000.0));

  CHECK_FALSE(eq1_max_a(3, 2).a_star.has_value());
  CHECK(*eq1_max_a(100, 2).a_star == 10);
  CHECK(*eq1_max_a(1000, 3).a_star == 100);
  CHECK(*eq1_max_a(64, 2).a_star == 8);
  CHECK_THROWS_AS(eq1_max_a(100, 1), std::invalid_argument);

  // bracketing invariant
  for (std::uint64_t n : {20ULL, 64ULL, 500ULL, 12345ULL}) {
    for (int b : {2, 3, 4}) {
      const auto r = eq1_max_a(n, b);
      if (!r.a_star) continue;
      const std::uint64_t a = *r.a_star;
      CHECK(binomial(n, b) > BigInt(n) * binomial(a, b));
      CHECK(binomial(n, b) <= BigInt(n) * binomial(a + 1, b));
    }
  }
}

TEST_CASE("lemma_ratio") {
  CHECK(lemma_ratio(5, 2) == Approx(0.8).epsilon(1e-15));
  CHECK(lemma_ratio(6, 2) == Approx(15.0 / 18.0).epsilon(1e-15));
  CHECK(lemma_ratio(17, 1) == 1.0);
  CHECK_THROWS_AS(lemma_ratio(2, 3), std::invalid_argument);
  for (int b : {2, 3, 4, 5}) {
    for (std::uint64_t a = b; a < 2000; ++a) CHECK(lemma_ratio(a + 1, b) > lemma_ratio(a, b));
  }
}
