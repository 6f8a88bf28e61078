#pragma once

#include "carrymix/column_array.hpp"
#include "carrymix/matrix.hpp"

#include <span>
#include <vector>

namespace carrymix {

/// Carries when a random base-b number is multiplied by a fixed k. States 0..k-1.
struct MultSpec {
  long k = 1;
  long b = 2;

  void validate() const;
};

/// Soft cap on k for matrix builds.
inline constexpr long kMaxMultiplier = 10'000;

/// kappa_i = floor((kappa_{i-1} + k d_i) / b), kappa_0 = 0. Digits least significant first.
/// Throws ValidationError for a digit outside [0, b-1].
CarryTrace mult_carry_trace(const MultSpec& spec, std::span<const int> digits);

/// K(i, j) = (1/b) #{d in [0, b-1] : floor((i + k d)/b) = j}.
RationalMatrix build_K(const MultSpec& spec);

/// (1/2) sum_j |K^r(0, j) - 1/k|. Asserts the bound k / (2 b^r); throws ConsistencyError if violated.
Rational mult_tv_exact(const MultSpec& spec, unsigned r);

/// k / (2 b^r).
Rational mult_tv_bound(const MultSpec& spec, unsigned r);

/// Row 0 of K^r by counting x in [0, b^r) with j b^r <= k x < (j+1) b^r.
/// Enumerates every x, so b^r is capped at kMultCountingCap.
inline constexpr unsigned long kMultCountingCap = 10'000'000;
RationalVector mult_counting_row(const MultSpec& spec, unsigned r);

/// Column c+1 equals column c cyclically shifted down by (b mod k).
bool is_generalized_circulant(const RationalMatrix& k_matrix, long shift);

}  // namespace carrymix
