#pragma once

#include "carrymix/matrix.hpp"

#include <vector>

namespace carrymix {

/// Numerator h(x) = h_0 + ... + h_{n+1} x^{n+1} of a series h(x) / (1 - x)^{n+1}.
class HPolynomial {
 public:
  /// coefficients.size() must be n + 2; throws ValidationError otherwise.
  HPolynomial(long n, std::vector<Rational> coefficients);

  long n() const noexcept { return n_; }
  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

  friend bool operator==(const HPolynomial&, const HPolynomial&) = default;

 private:
  long n_;
  std::vector<Rational> coeffs_;
};

/// (n+2) x (n+2) integer matrix: entry (i, j) counts solutions of
/// a_1 + ... + a_{n+1} = i r - j with 0 <= a_l <= r - 1.
RationalMatrix build_C(long n, long r);

/// Numerator of sum_k a_{rk} x^k. Cross-checked against direct series sectioning
/// to order kSectionCheckOrder; throws ConsistencyError on disagreement.
HPolynomial section_poly(const HPolynomial& h, long r);

inline constexpr std::size_t kSectionCheckOrder = 30;

/// First `terms` coefficients a_0.. of h(x) / (1 - x)^{n+1}, by convolution with the binomial series.
std::vector<Rational> expand_series(const HPolynomial& h, std::size_t terms);

/// Multiplies a truncated series by (1 - x)^{n+1}, keeping `terms` coefficients.
std::vector<Rational> times_one_minus_x_power(const std::vector<Rational>& series, long power, std::size_t terms);

/// Drop the outer rows/columns of build_C(n, b), transpose and scale by b^{-n}.
/// Must reproduce build_P(n, b); throws ConsistencyError otherwise.
RationalMatrix trim_to_P(long n, long b);

}  // namespace carrymix
