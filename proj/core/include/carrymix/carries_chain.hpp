#pragma once

#include "carrymix/matrix.hpp"
#include "carrymix/rational.hpp"

#include <vector>

namespace carrymix {

/// Carries chain for adding n random base-b numbers. States are carries 0..n-1.
struct ChainSpec {
  long n = 1;  ///< number of addends, >= 1
  long b = 2;  ///< base, >= 2

  /// Throws ValidationError unless n >= 1 and b >= 2.
  void validate() const;
};

/// Practical caps on exact matrix powers.
inline constexpr long kMaxChainPowerSide = 64;
inline constexpr unsigned kMaxChainPowerSteps = 64;

/// Transition matrix between successive carries.
///
/// Built twice, once from the alternating binomial sum and once by coefficient
/// extraction from ((1 - x^b)/(1 - x))^(n+1); a disagreement throws ConsistencyError.
RationalMatrix build_P(const ChainSpec& spec);

/// Alternating-sum form only (exposed for cross-checks and benchmarks).
RationalMatrix build_P_alternating(const ChainSpec& spec);
/// Coefficient-extraction form only.
RationalMatrix build_P_coefficient(const ChainSpec& spec);

/// pi(j) = A(n, j) / n!. Independent of the base.
RationalVector stationary(long n);

/// Row 0 of P^r: law of the r-th carry.
RationalVector carry_distribution(const ChainSpec& spec, unsigned r);

struct CarryMoments {
  unsigned j = 1;
  Rational mean;
  Rational variance;
};

/// Closed-form mean and variance of the j-th carry, checked against the exact law
/// of carry_distribution(spec, j). Throws ConsistencyError on mismatch.
CarryMoments carry_moments(const ChainSpec& spec, unsigned j);

/// Closed forms alone.
Rational carry_mean_closed(const ChainSpec& spec, unsigned j);
Rational carry_variance_closed(const ChainSpec& spec, unsigned j);

/// Expected total number of carries over m columns, checked against the sum of
/// per-column means.
Rational total_carries_mean(const ChainSpec& spec, unsigned m);

/// max_j (1 - P^r(0, j) / pi(j)) from exact matrix powers.
Rational separation_exact(const ChainSpec& spec, unsigned r);

/// 1 - prod_{i=1}^{n-1} (1 - i / b^r), each factor clamped at 0.
/// Needs no matrix, so it is usable for large n.
Rational separation_closed(const ChainSpec& spec, unsigned r);

/// Same product evaluated for an arbitrary positive scale b^r (used for b^r = c n^2).
Rational separation_closed_at_scale(long n, const BigInt& scale);

/// f_r(i) = P^r(0, i) / pi(i) for i = 0..n-1.
RationalVector separation_ratios(const ChainSpec& spec, unsigned r);

/// (1/2) sum_j |P^r(0, j) - pi(j)|.
Rational tv_from_start(const ChainSpec& spec, unsigned r);

}  // namespace carrymix
