#pragma once

#include "carrymix/matrix.hpp"
#include "carrymix/permutation.hpp"
#include "carrymix/rational.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace carrymix {

/// Seeded generator used by every sampler. Deterministic per seed on a given
/// standard library implementation.
using Rng = std::mt19937_64;
inline constexpr const char* kRngName = "mt19937_64";

/// tau_1..tau_m after successive b-shuffles; tau_0 is the identity.
struct ShuffleTrace {
  long n = 0;
  long b = 2;
  std::vector<Permutation> perms;
};

/// Exact law on S_n keyed by permutation.
using DistributionTable = std::map<Permutation, Rational>;

/// One b-shuffle: n independent uniform base-b digits labelled by pi_label.
/// b = 1 always yields the identity.
Permutation gsr_sample(long n, long b, Rng& rng);

/// Physical riffle of a sorted deck: binomial cut, then drop cards from the packet
/// bottoms with probability proportional to packet size (b = 2 only). Returns the
/// resulting deck top to bottom, which has the same law as gsr_sample(n, 2).
Permutation gsr_sample_cut_and_drop(long n, Rng& rng);

/// C(n + b - r, n) / b^n with r = 1 + descents(p^{-1}).
Rational qb_probability(const Permutation& p, long b);

/// Largest b^n enumerated by exhaustive_shuffle_dist.
inline constexpr std::uint64_t kShuffleEnumerationCap = 10'000'000;

/// Exact one-shuffle law by pushing all b^n digit words through pi_label.
/// Throws ResourceCapError above kShuffleEnumerationCap.
DistributionTable exhaustive_shuffle_dist(long n, long b);

/// (Q * Q')(sigma) = sum_eta Q(eta) Q'(sigma eta^{-1}).
DistributionTable convolve(const DistributionTable& first, const DistributionTable& second);

Rational total_mass(const DistributionTable& dist);

/// Transition matrix of the position of one tracked card under repeated b-shuffles.
/// Row/column k (0-based) is position k+1.
RationalMatrix card_tracking_matrix(long n, long b);

/// Same matrix obtained by summing the exact shuffle law over permutations moving
/// position i to position j. Independent of the closed formula above.
RationalMatrix card_tracking_from_distribution(const DistributionTable& dist, long n);

}  // namespace carrymix
