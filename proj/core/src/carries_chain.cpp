#include "carrymix/carries_chain.hpp"

#include "carrymix/combinatorics.hpp"
#include "carrymix/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace carrymix {

void ChainSpec::validate() const {
  if (n < 1) throw ValidationError("chain spec: n must be at least 1");
  if (b < 2) throw ValidationError("chain spec: b must be at least 2");
}

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

void check_power_caps(const ChainSpec& spec, unsigned r) {
  if (spec.n > kMaxChainPowerSide || r > kMaxChainPowerSteps) {
    throw ResourceCapError("matrix powers are capped at n <= " + std::to_string(kMaxChainPowerSide) +
                           ", r <= " + std::to_string(kMaxChainPowerSteps));
  }
}

}  // namespace

RationalMatrix build_P_alternating(const ChainSpec& spec) {
  spec.validate();
  const long n = spec.n;
  const long b = spec.b;
  const BigInt scale = big_pow(static_cast<unsigned long>(b), static_cast<unsigned long>(n));
  RationalMatrix p(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      BigInt sum = 0;
      const long upper = j - floor_div(i, b);
      for (long r = 0; r <= upper; ++r) {
        BigInt term = binomial(n + 1, r) * binomial(n - 1 - i + (j + 1 - r) * b, n);
        if (r % 2 == 0) {
          sum += term;
        } else {
          sum -= term;
        }
      }
      p(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = make_rational(sum, scale);
    }
  }
  return p;
}

RationalMatrix build_P_coefficient(const ChainSpec& spec) {
  spec.validate();
  const long n = spec.n;
  const long b = spec.b;
  const BigInt scale = big_pow(static_cast<unsigned long>(b), static_cast<unsigned long>(n));
  RationalMatrix p(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) {
    for (long j = 0; j < n; ++j) {
      p(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          make_rational(composition_count(b, n + 1, (j + 1) * b - i - 1), scale);
    }
  }
  return p;
}

RationalMatrix build_P(const ChainSpec& spec) {
  RationalMatrix alternating = build_P_alternating(spec);
  if (alternating != build_P_coefficient(spec)) {
    throw ConsistencyError("build_P: alternating-sum and coefficient forms disagree for n=" +
                           std::to_string(spec.n) + ", b=" + std::to_string(spec.b));
  }
  return alternating;
}

RationalVector stationary(long n) {
  if (n < 1) throw ValidationError("stationary: n must be at least 1");
  const BigInt total = factorial(static_cast<unsigned long>(n));
  RationalVector pi(static_cast<std::size_t>(n));
  for (long j = 0; j < n; ++j) pi[static_cast<std::size_t>(j)] = make_rational(eulerian(n, j), total);
  return pi;
}

RationalVector carry_distribution(const ChainSpec& spec, unsigned r) {
  spec.validate();
  check_power_caps(spec, r);
  const RationalMatrix pr = mat_pow(build_P(spec), r);
  const auto row = pr.row(0);
  return {row.begin(), row.end()};
}

Rational carry_mean_closed(const ChainSpec& spec, unsigned j) {
  spec.validate();
  const Rational decay = make_rational(1, big_pow(static_cast<unsigned long>(spec.b), j));
  return make_rational(spec.n - 1, 2) * (1 - decay);
}

Rational carry_variance_closed(const ChainSpec& spec, unsigned j) {
  spec.validate();
  // A single addend never carries; the (n+1)/12 law starts at n = 2.
  if (spec.n == 1) return 0;
  const Rational decay = make_rational(1, big_pow(static_cast<unsigned long>(spec.b), 2UL * j));
  return make_rational(spec.n + 1, 12) * (1 - decay);
}

CarryMoments carry_moments(const ChainSpec& spec, unsigned j) {
  if (j < 1) throw ValidationError("carry_moments: column index j must be at least 1");
  const RationalVector law = carry_distribution(spec, j);
  Rational mean = 0;
  Rational second = 0;
  for (std::size_t k = 0; k < law.size(); ++k) {
    const long kk = static_cast<long>(k);
    mean += law[k] * kk;
    second += law[k] * (kk * kk);
  }
  const Rational variance = second - mean * mean;

  CarryMoments out{j, carry_mean_closed(spec, j), carry_variance_closed(spec, j)};
  if (out.mean != mean || out.variance != variance) {
    throw ConsistencyError("carry_moments: closed form disagrees with chain law at j=" + std::to_string(j) +
                           " (mean " + to_string(out.mean) + " vs " + to_string(mean) + ", variance " +
                           to_string(out.variance) + " vs " + to_string(variance) + ")");
  }
  return out;
}

Rational total_carries_mean(const ChainSpec& spec, unsigned m) {
  spec.validate();
  if (m < 1) throw ValidationError("total_carries_mean: m must be at least 1");
  const Rational tail = make_rational(1, big_pow(static_cast<unsigned long>(spec.b), m));
  const Rational closed = make_rational(spec.n - 1, 2) * (Rational(m) - make_rational(1, spec.b - 1) * (1 - tail));
  Rational summed = 0;
  for (unsigned j = 1; j <= m; ++j) summed += carry_mean_closed(spec, j);
  if (closed != summed) {
    throw ConsistencyError("total_carries_mean: closed form " + to_string(closed) + " differs from summed means " +
                           to_string(summed));
  }
  return closed;
}

RationalVector separation_ratios(const ChainSpec& spec, unsigned r) {
  const RationalVector law = carry_distribution(spec, r);
  const RationalVector pi = stationary(spec.n);
  RationalVector ratios(law.size());
  for (std::size_t i = 0; i < law.size(); ++i) ratios[i] = law[i] / pi[i];
  return ratios;
}

Rational separation_exact(const ChainSpec& spec, unsigned r) {
  const RationalVector ratios = separation_ratios(spec, r);
  Rational worst = 1 - ratios.front();
  for (const auto& f : ratios) worst = std::max(worst, Rational(1 - f));
  return worst;
}

Rational separation_closed_at_scale(long n, const BigInt& scale) {
  if (n < 1) throw ValidationError("separation_closed: n must be at least 1");
  if (scale <= 0) throw ValidationError("separation_closed: scale must be positive");
  Rational product = 1;
  for (long i = 1; i < n; ++i) {
    if (scale <= i) return 1;
    product *= make_rational(scale - i, scale);
  }
  return 1 - product;
}

Rational separation_closed(const ChainSpec& spec, unsigned r) {
  spec.validate();
  return separation_closed_at_scale(spec.n, big_pow(static_cast<unsigned long>(spec.b), r));
}

Rational tv_from_start(const ChainSpec& spec, unsigned r) {
  const RationalVector law = carry_distribution(spec, r);
  const RationalVector pi = stationary(spec.n);
  Rational total = 0;
  for (std::size_t j = 0; j < law.size(); ++j) total += abs(Rational(law[j] - pi[j]));
  return total / 2;
}

}  // namespace carrymix
