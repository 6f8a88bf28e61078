#pragma once

#include "carrymix/column_array.hpp"
#include "carrymix/rational.hpp"
#include "carrymix/shuffling.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace carrymix {

using TraceKey = std::vector<int>;

enum class LawMode { exact, empirical };

/// Joint law of a trace (i_1, ..., i_m). Exact laws fill `probabilities`;
/// empirical laws fill `counts` and record the seed.
struct JointLaw {
  long n = 0;
  long m = 0;
  long b = 2;
  LawMode mode = LawMode::exact;
  std::map<TraceKey, Rational> probabilities;
  std::map<TraceKey, std::uint64_t> counts;
  std::uint64_t samples = 0;
  std::optional<std::uint64_t> seed;

  /// Sum of probabilities (exact) or of counts (empirical).
  Rational total() const;
};

/// Enumeration budget for exhaustive joint laws: b^{nm}.
inline constexpr std::uint64_t kJointEnumerationCap = 10'000'000;

/// n x m array of independent uniform digits.
ColumnArray sample_columns(long n, long m, long b, Rng& rng);

/// Exact law of (kappa_1..kappa_m) over all b^{nm} arrays, enumerated in odometer
/// order with column C_1 fastest. `jobs` splits the index range across threads.
JointLaw exhaustive_joint_carries(long n, long m, long b, unsigned jobs = 1);

/// Exact law of (d(tau_1)..d(tau_m)) with tau_j = pi(A_j) ... pi(A_1), over all
/// m-tuples of digit words.
JointLaw exhaustive_joint_descents(long n, long m, long b, unsigned jobs = 1);

/// prod_j P(i_{j-1}, i_j) with i_0 = 0, over every trace with non-zero probability.
JointLaw markov_joint_law(long n, long m, long b);

/// Empirical carry traces of `samples` random arrays. Job t uses seed + t, so the
/// result depends on (seed, jobs).
JointLaw sample_joint_carries(long n, long m, long b, std::uint64_t samples, std::uint64_t seed, unsigned jobs = 1);

struct ChiSquareResult {
  double statistic = 0.0;
  long dof = 0;
  /// Cells merged into each tested group, in lexicographic trace order.
  std::vector<std::vector<TraceKey>> groups;
};

/// Minimum expected count per group after pooling.
inline constexpr double kMinExpectedCount = 5.0;

/// Pearson statistic of empirical counts against an exact law. Cells are pooled
/// in lexicographic order until each group expects at least kMinExpectedCount;
/// a short final group is merged into its predecessor.
/// Throws ValidationError when observed mass falls outside the expected support.
ChiSquareResult chi_square(const JointLaw& observed, const JointLaw& expected);

/// Upper quantile of the chi-square distribution (e.g. p = 0.999).
double chi_square_quantile(long dof, double p);

/// Equality of two exact laws as maps (zero-probability keys ignored).
bool same_law(const JointLaw& lhs, const JointLaw& rhs);

}  // namespace carrymix
