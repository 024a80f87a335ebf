#pragma once

// Closed-form moments of X_gamma, the number of dominating gamma-sets of
// G(n, 1 - epsilon), together with the first-moment and Chebyshev tails and
// the counting bounds on non-dominating sets.
//
// Everything is evaluated in log space (lgamma binomials, log1p powers), so
// n up to 10^6 stays finite even where the values underflow to zero.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>

#include "domset/bigint.hpp"

namespace domset {

/// ln C(n, k) via lgamma; -inf when k > n.
double log_binomial(double n, double k);

/// E(X_gamma) = C(n, gamma) * (1 - eps^gamma)^(n - gamma).
double expected_count(std::size_t n, int gamma, double epsilon);

struct MarkovTail {
  double bound;     // min(1, uncapped)
  double uncapped;  // C(n, gamma-1) * (1 - eps^(gamma-1))^(n-gamma+1)
};

/// First-moment bound on P(X_{gamma-1} >= 1). Requires gamma >= 2.
MarkovTail markov_tail(std::size_t n, int gamma, double epsilon);

/// Probability that two fixed gamma-sets sharing r vertices both dominate.
///
///   P_outside = (1 - 2 eps^gamma + eps^(2gamma - r))^(n - 2gamma + r)
///   P_mutual  = sum_{i,j=0}^{gamma-r} (-1)^(i+j) C(gamma-r, i) C(gamma-r, j) eps^(gamma(i+j) - ij)
///
/// P_mutual is inclusion-exclusion over the vertices of A\B left undominated
/// by B and of B\A left undominated by A; i x j edges between the two groups
/// are shared by both events, hence the -ij.
double pair_joint_probability(int gamma, int r, double epsilon, std::size_t n);

/// Exact integer coefficients of P_mutual as a polynomial in eps: exponent -> coefficient.
/// With max_events >= 0 only the inclusion-exclusion terms with i + j <= max_events
/// are kept (max_events = 2 is the pairwise expansion).
std::map<int, std::int64_t> mutual_polynomial(int gamma, int r, int max_events = -1);

/// E(X_gamma^2) = sum_r C(n,gamma) C(gamma,r) C(n-gamma,gamma-r) * pair_joint_probability(r).
double second_moment_exact(std::size_t n, int gamma, double epsilon);

struct Variance {
  double value = 0.0;    // clamped at 0
  double raw = 0.0;      // before clamping
  bool clamped = false;  // raw was negative within rounding tolerance
};

/// Var(X_gamma). Evaluated as C(n,gamma) * sum_r w_r (P_r - p^2), which equals
/// E(X^2) - E(X)^2 by Vandermonde but avoids subtracting two large numbers.
Variance variance_exact(std::size_t n, int gamma, double epsilon);

/// Var(X_gamma) / (phi * n^(gamma - 1/2))^2. Requires phi > 0.
double chebyshev_tail(std::size_t n, int gamma, double epsilon, double phi);

struct MomentReport {
  std::size_t n = 0;
  int gamma = 0;
  double epsilon = 0.0;
  std::optional<MarkovTail> markov;  // absent for gamma < 2
  double expected = 0.0;
  double expected_fraction = 0.0;
  double second_moment = 0.0;
  Variance variance;

  double chebyshev_tail(double phi) const;
};

MomentReport moment_report(std::size_t n, int gamma, double epsilon);

/// n^(gamma-1-1/(gamma-1)) / gamma!; order of the guaranteed number of
/// non-dominating gamma-sets. Requires gamma >= 3 (for gamma = 2 every pair may dominate).
double cor24_lower_bound(double n, int gamma);

struct BoundsBracket {
  int gamma = 0;
  std::size_t n = 0;
  BigInt total;               // C(n, gamma)
  double upper_defect = 0.0;  // n^(gamma-1-1/(gamma-1)) / gamma!
  double lower_defect = 0.0;  // (ln n)^gamma * n^(gamma - 1/(gamma-1)), unit constant
  /// Smallest n >= 2 from which lower_defect >= upper_defect.
  std::size_t defect_crossover_n = 0;
  /// Smallest n >= gamma from which upper_defect < C(n, gamma).
  std::size_t total_threshold_n = 0;
};

/// Unit-constant bracket C(n,g) - lower_defect <= M <= C(n,g) - upper_defect.
/// Only orderings and trends are meaningful; the constants are unspecified.
BoundsBracket cor32_bracket(std::size_t n, int gamma);

struct Eq1Report {
  int b = 0;
  std::uint64_t n = 0;
  /// Largest a >= b with C(n,b) > n * C(a,b); absent if even a = b fails.
  std::optional<std::uint64_t> a_star;
  /// (a_star + 1)^b >= n^(b-1), i.e. a_star + 1 >= n^((b-1)/b), in exact integers.
  bool witness_holds = false;
  double witness_target = 0.0;  // n^((b-1)/b)
};

/// Exact search for the largest a satisfying C(n,b) > n*C(a,b). Throws for
/// b < 2 (the inequality cannot hold when b = 1).
Eq1Report eq1_max_a(std::uint64_t n, int b);

/// C(a,b) * b! / a^b = prod_{i<b} (1 - i/a). Requires a >= b >= 1.
double lemma_ratio(std::uint64_t a, int b);

}  // namespace domset
