#include "domset/moments.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace domset {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// C(n, k) as a real number: exact product while it stays finite, else inf.
double binomial_real(double n, double k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  long double result = 1.0L;
  for (double i = 1; i <= k; ++i) {
    result = result * static_cast<long double>(n - k + i) / static_cast<long double>(i);
  }
  const auto d = static_cast<double>(result);
  return std::isfinite(d) ? d : kInf;
}

// base^exponent written as exp(exponent * log1p(base - 1)); base is given as
// (1 + offset) so small offsets keep full precision. x^0 = 1 for every x.
double pow1p(double offset, double exponent) {
  if (exponent == 0.0) return 1.0;
  return std::exp(exponent * std::log1p(offset));
}

// weight * probability, falling back to log space when weight overflows.
double scaled(double weight, double log_weight, double probability) {
  if (probability <= 0.0) return 0.0;
  if (std::isfinite(weight)) return weight * probability;
  return std::exp(log_weight + std::log(probability));
}

double mutual_probability(int gamma, int r, double epsilon) {
  const int d = gamma - r;
  double sum = 0.0;
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      const double sign = ((i + j) % 2 == 0) ? 1.0 : -1.0;
      const int exponent = gamma * (i + j) - i * j;
      sum += sign * binomial_real(d, i) * binomial_real(d, j) * std::pow(epsilon, exponent);
    }
  }
  return sum;
}

void check_pair(int gamma, int r, std::size_t n) {
  require(gamma >= 1, "gamma must be >= 1");
  require(r >= 0 && r <= gamma, "overlap r must lie in [0, gamma]");
  require(static_cast<std::size_t>(gamma) <= n, "gamma must be <= n");
  require(static_cast<std::size_t>(2 * gamma - r) <= n, "2*gamma - r must be <= n");
}

void check_moment_args(std::size_t n, int gamma, double epsilon) {
  require(gamma >= 1, "gamma must be >= 1");
  require(static_cast<std::size_t>(gamma) <= n, "gamma must be <= n");
  require(epsilon >= 0.0 && epsilon <= 1.0, "epsilon must lie in [0, 1]");
}

}  // namespace

double log_binomial(double n, double k) {
  if (k < 0 || k > n) return -kInf;
  return std::lgamma(n + 1) - std::lgamma(k + 1) - std::lgamma(n - k + 1);
}

double expected_count(std::size_t n, int gamma, double epsilon) {
  check_moment_args(n, gamma, epsilon);
  const double nd = static_cast<double>(n);
  const double p = pow1p(-std::pow(epsilon, gamma), nd - gamma);
  return scaled(binomial_real(nd, gamma), log_binomial(nd, gamma), p);
}

MarkovTail markov_tail(std::size_t n, int gamma, double epsilon) {
  require(gamma >= 2, "markov_tail requires gamma >= 2");
  const double raw = expected_count(n, gamma - 1, epsilon);
  return {std::min(1.0, raw), raw};
}

double pair_joint_probability(int gamma, int r, double epsilon, std::size_t n) {
  check_pair(gamma, r, n);
  require(epsilon >= 0.0 && epsilon <= 1.0, "epsilon must lie in [0, 1]");
  const double eg = std::pow(epsilon, gamma);
  const double outside =
      pow1p(-2.0 * eg + std::pow(epsilon, 2 * gamma - r), static_cast<double>(n) - 2 * gamma + r);
  return mutual_probability(gamma, r, epsilon) * outside;
}

std::map<int, std::int64_t> mutual_polynomial(int gamma, int r, int max_events) {
  require(gamma >= 1 && r >= 0 && r <= gamma, "need 0 <= r <= gamma, gamma >= 1");
  const int d = gamma - r;
  std::map<int, std::int64_t> coefficients;
  for (int i = 0; i <= d; ++i) {
    for (int j = 0; j <= d; ++j) {
      if (max_events >= 0 && i + j > max_events) continue;
      const auto c = static_cast<std::int64_t>(binomial(d, i) * binomial(d, j));
      coefficients[gamma * (i + j) - i * j] += ((i + j) % 2 == 0) ? c : -c;
    }
  }
  std::erase_if(coefficients, [](const auto& kv) { return kv.second == 0; });
  return coefficients;
}

double second_moment_exact(std::size_t n, int gamma, double epsilon) {
  check_moment_args(n, gamma, epsilon);
  const double nd = static_cast<double>(n);
  double total = 0.0;
  for (int r = 0; r <= gamma; ++r) {
    if (static_cast<std::size_t>(2 * gamma - r) > n) continue;  // no such pairs
    const double weight = binomial_real(nd, gamma) * binomial_real(gamma, r) *
                          binomial_real(nd - gamma, gamma - r);
    const double log_weight =
        log_binomial(nd, gamma) + log_binomial(gamma, r) + log_binomial(nd - gamma, gamma - r);
    total += scaled(weight, log_weight, pair_joint_probability(gamma, r, epsilon, n));
  }
  return total;
}

Variance variance_exact(std::size_t n, int gamma, double epsilon) {
  check_moment_args(n, gamma, epsilon);
  const double nd = static_cast<double>(n);
  const double p = pow1p(-std::pow(epsilon, gamma), nd - gamma);
  const double p2 = p * p;

  double centered = 0.0;
  for (int r = 0; r <= gamma; ++r) {
    if (static_cast<std::size_t>(2 * gamma - r) > n) continue;
    const double w = binomial_real(gamma, r) * binomial_real(nd - gamma, gamma - r);
    const double diff =
        (r == gamma) ? p * (1.0 - p) : pair_joint_probability(gamma, r, epsilon, n) - p2;
    centered += w * diff;
  }

  Variance v;
  const double total = binomial_real(nd, gamma);
  v.raw = std::isfinite(total) ? total * centered
                               : std::copysign(std::exp(log_binomial(nd, gamma) +
                                                        std::log(std::abs(centered))),
                                               centered);
  v.value = v.raw;
  if (v.raw < 0.0) {
    const double scale = std::max(second_moment_exact(n, gamma, epsilon),
                                  std::pow(expected_count(n, gamma, epsilon), 2));
    if (-v.raw <= 1e-9 * scale) {
      v.value = 0.0;
      v.clamped = true;
    }
  }
  return v;
}

double chebyshev_tail(std::size_t n, int gamma, double epsilon, double phi) {
  require(phi > 0.0, "phi must be > 0");
  const double var = variance_exact(n, gamma, epsilon).value;
  return var / std::pow(static_cast<double>(n), 2 * gamma - 1) / (phi * phi);
}

double MomentReport::chebyshev_tail(double phi) const {
  require(phi > 0.0, "phi must be > 0");
  return variance.value / std::pow(static_cast<double>(n), 2 * gamma - 1) / (phi * phi);
}

MomentReport moment_report(std::size_t n, int gamma, double epsilon) {
  MomentReport m;
  m.n = n;
  m.gamma = gamma;
  m.epsilon = epsilon;
  if (gamma >= 2) m.markov = markov_tail(n, gamma, epsilon);
  m.expected = expected_count(n, gamma, epsilon);
  m.expected_fraction = pow1p(-std::pow(epsilon, gamma), static_cast<double>(n) - gamma);
  m.second_moment = second_moment_exact(n, gamma, epsilon);
  m.variance = variance_exact(n, gamma, epsilon);
  return m;
}

double cor24_lower_bound(double n, int gamma) {
  if (gamma < 3) {
    throw std::invalid_argument(
        "cor24_lower_bound requires gamma >= 3: for gamma = 2 every pair may dominate");
  }
  return std::pow(n, gamma - 1 - 1.0 / (gamma - 1)) / std::tgamma(gamma + 1.0);
}

namespace {

double lower_defect_at(double n, int gamma) {
  return std::pow(std::log(n), gamma) * std::pow(n, gamma - 1.0 / (gamma - 1));
}

}  // namespace

BoundsBracket cor32_bracket(std::size_t n, int gamma) {
  if (gamma < 3) throw std::invalid_argument("cor32_bracket requires gamma >= 3");
  require(n >= 1, "n must be >= 1");
  BoundsBracket b;
  b.gamma = gamma;
  b.n = n;
  b.total = binomial(n, static_cast<std::uint64_t>(gamma));
  b.upper_defect = cor24_lower_bound(static_cast<double>(n), gamma);
  b.lower_defect = lower_defect_at(static_cast<double>(n), gamma);

  // lower/upper = gamma! * (ln n)^gamma * n, increasing for n > 1.
  std::size_t m = 2;
  while (lower_defect_at(static_cast<double>(m), gamma) <
         cor24_lower_bound(static_cast<double>(m), gamma)) {
    ++m;
  }
  b.defect_crossover_n = m;

  m = static_cast<std::size_t>(gamma);
  while (cor24_lower_bound(static_cast<double>(m), gamma) >= binomial_real(m, gamma)) ++m;
  b.total_threshold_n = m;
  return b;
}

Eq1Report eq1_max_a(std::uint64_t n, int b) {
  if (b < 2) {
    throw std::invalid_argument("eq1_max_a requires b >= 2: C(n,1) > n*C(a,1) is impossible");
  }
  Eq1Report rep;
  rep.b = b;
  rep.n = n;
  rep.witness_target = std::pow(static_cast<double>(n), (b - 1.0) / b);

  const auto ub = static_cast<std::uint64_t>(b);
  const BigInt lhs = binomial(n, ub);
  auto holds = [&](std::uint64_t a) { return lhs > BigInt(n) * binomial(a, ub); };

  if (n <= ub || !holds(ub)) return rep;
  // holds(a) is monotone: true on [b, a*], false above; false at a = n.
  std::uint64_t lo = ub, hi = n;
  while (hi - lo > 1) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    (holds(mid) ? lo : hi) = mid;
  }
  rep.a_star = lo;
  rep.witness_holds = boost::multiprecision::pow(BigInt(lo + 1), static_cast<unsigned>(b)) >=
                      boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(b - 1));
  return rep;
}

double lemma_ratio(std::uint64_t a, int b) {
  require(b >= 1, "b must be >= 1");
  if (a < static_cast<std::uint64_t>(b)) throw std::invalid_argument("lemma_ratio requires a >= b");
  long double product = 1.0L;
  for (int i = 1; i < b; ++i) product *= 1.0L - static_cast<long double>(i) / a;
  return static_cast<double>(product);
}

}  // namespace domset
