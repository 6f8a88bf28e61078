#include "carrymix/gf_sections.hpp"

#include "carrymix/carries_chain.hpp"
#include "carrymix/combinatorics.hpp"
#include "carrymix/errors.hpp"

#include <stdexcept>
#include <string>

namespace carrymix {

HPolynomial::HPolynomial(long n, std::vector<Rational> coefficients) : n_(n), coeffs_(std::move(coefficients)) {
  if (n < 0) throw ValidationError("h-polynomial: n must be non-negative");
  if (coeffs_.size() != static_cast<std::size_t>(n + 2)) {
    throw ValidationError("h-polynomial: expected " + std::to_string(n + 2) + " coefficients, got " +
                          std::to_string(coeffs_.size()));
  }
}

RationalMatrix build_C(long n, long r) {
  if (n < 0) throw ValidationError("build_C: n must be non-negative");
  if (r < 1) throw ValidationError("build_C: r must be at least 1");
  const auto side = static_cast<std::size_t>(n + 2);
  RationalMatrix c(side, side);
  for (long i = 0; i <= n + 1; ++i)
    for (long j = 0; j <= n + 1; ++j)
      c(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = Rational(composition_count(r, n + 1, i * r - j));
  return c;
}

std::vector<Rational> expand_series(const HPolynomial& h, std::size_t terms) {
  // 1 / (1 - x)^{n+1} = sum_k C(n + k, n) x^k
  const long n = h.n();
  std::vector<Rational> out(terms, Rational(0));
  for (std::size_t k = 0; k < terms; ++k) {
    for (std::size_t i = 0; i <= k && i < h.coefficients().size(); ++i) {
      out[k] += h.coefficients()[i] * Rational(binomial(n + static_cast<long long>(k - i), n));
    }
  }
  return out;
}

std::vector<Rational> times_one_minus_x_power(const std::vector<Rational>& series, long power, std::size_t terms) {
  std::vector<Rational> out(terms, Rational(0));
  for (std::size_t k = 0; k < terms; ++k) {
    for (long i = 0; i <= power && static_cast<std::size_t>(i) <= k; ++i) {
      if (k - static_cast<std::size_t>(i) >= series.size()) continue;
      Rational term = series[k - static_cast<std::size_t>(i)] * Rational(binomial(power, i));
      if (i % 2 == 0) {
        out[k] += term;
      } else {
        out[k] -= term;
      }
    }
  }
  return out;
}

HPolynomial section_poly(const HPolynomial& h, long r) {
  const long n = h.n();
  const RationalMatrix c = build_C(n, r);
  std::vector<Rational> sectioned(static_cast<std::size_t>(n + 2), Rational(0));
  for (std::size_t i = 0; i < sectioned.size(); ++i)
    for (std::size_t j = 0; j < sectioned.size(); ++j) sectioned[i] += c(i, j) * h.coefficients()[j];

  // Independent route: take every r-th coefficient of the expanded series and clear the denominator.
  const std::size_t order = kSectionCheckOrder;
  const std::vector<Rational> full = expand_series(h, (order - 1) * static_cast<std::size_t>(r) + 1);
  std::vector<Rational> every_rth(order);
  for (std::size_t k = 0; k < order; ++k) every_rth[k] = full[k * static_cast<std::size_t>(r)];
  const std::vector<Rational> numerator = times_one_minus_x_power(every_rth, n + 1, order);
  for (std::size_t k = 0; k < order; ++k) {
    const Rational expected = k < sectioned.size() ? sectioned[k] : Rational(0);
    if (numerator[k] != expected) {
      throw ConsistencyError("section_poly: coefficient " + std::to_string(k) + " is " + to_string(expected) +
                             " by the section matrix but " + to_string(numerator[k]) + " by series sectioning");
    }
  }
  return HPolynomial(n, std::move(sectioned));
}

RationalMatrix trim_to_P(long n, long b) {
  if (n < 1) throw ValidationError("trim_to_P: n must be at least 1");
  if (b < 2) throw ValidationError("trim_to_P: b must be at least 2");
  const RationalMatrix c = build_C(n, b);
  const auto side = static_cast<std::size_t>(n);
  RationalMatrix trimmed(side, side);
  for (std::size_t i = 0; i < side; ++i)
    for (std::size_t j = 0; j < side; ++j) trimmed(i, j) = c(i + 1, j + 1);
  RationalMatrix p = trimmed.transpose().scaled(make_rational(1, big_pow(static_cast<unsigned long>(b), static_cast<unsigned long>(n))));
  if (p != build_P(ChainSpec{n, b})) {
    throw ConsistencyError("trim_to_P: trimmed section matrix differs from the carries matrix for n=" +
                           std::to_string(n) + ", b=" + std::to_string(b));
  }
  return p;
}

}  // namespace carrymix
