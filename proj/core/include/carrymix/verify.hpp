#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace carrymix {

/// Outcome of one verification item.
struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
  void append(const VerifyReport& other);
};

struct VerifyOptions {
  bool quick = false;              ///< reduced grids and sample sizes
  std::uint64_t seed = 20080617;   ///< base seed for every randomized check
  unsigned jobs = 1;
};

// Each verify_* runs one family of identities over its documented grid. Exceptions
// raised inside a check (including ConsistencyError) are reported as failures.

/// Closed-form matrices: (n=3, all b), base 2, multiplication k=7 b=10, card tracking n=2,3.
VerifyReport verify_golden(const VerifyOptions& opts);
/// pi P = pi for n <= 6, b in {2,3,5,10}.
VerifyReport verify_stationary(const VerifyOptions& opts);
/// Characteristic polynomials of P and of the card-tracking matrix.
VerifyReport verify_eigen(const VerifyOptions& opts);
/// P_a P_b = P_ab, Q_a Q_b = Q_ab, K_a K_b = K_ab.
VerifyReport verify_semigroup(const VerifyOptions& opts);
/// 2x2 minors of P, and minors up to order 4 for b = 2.
VerifyReport verify_tp2(const VerifyOptions& opts);
/// Exhaustive joint carries law equals the joint descents law and the Markov product.
VerifyReport verify_theorem_main_grid(const VerifyOptions& opts);

enum class TheoremMode { exhaustive, montecarlo };
/// Single configuration. Montecarlo mode compares sampled carry traces with the
/// Markov product by chi-square at the 0.999 quantile.
VerifyReport verify_theorem_main(long n, long m, long b, TheoremMode mode, std::uint64_t samples,
                                 const VerifyOptions& opts);

/// Bar/star round trips, injectivity, carry/descent position identities, starkey, worked example.
VerifyReport verify_bijections_grid(const VerifyOptions& opts);
/// Same identities on one (n, m, b): all arrays when exhaustive, else `samples` random arrays.
VerifyReport verify_bijections(long n, long m, long b, bool exhaustive, std::uint64_t samples,
                               const VerifyOptions& opts);

/// Exact versus closed-form separation, monotone ratios, and the b^r = c n^2 limit.
VerifyReport verify_separation(const VerifyOptions& opts);
/// Closed-form carry moments against chain moments; total carries mean.
VerifyReport verify_moments(const VerifyOptions& opts);
/// Exhaustive shuffle law against the closed formula, and both samplers against it.
VerifyReport verify_shuffle(const VerifyOptions& opts);
/// Doubly stochastic, circulant shift, total variation bound, counting identity, worked trace.
VerifyReport verify_mult(const VerifyOptions& opts);
/// Trimmed section matrix equals P; section_poly against series sectioning.
VerifyReport verify_sections(const VerifyOptions& opts);
/// Card-tracking chain: displays, spectrum, semigroup, uniform stationary law, exact and simulated laws.
VerifyReport verify_card(const VerifyOptions& opts);

/// Every family above.
VerifyReport verify_all(const VerifyOptions& opts);

}  // namespace carrymix
