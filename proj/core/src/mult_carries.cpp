#include "carrymix/mult_carries.hpp"

#include "carrymix/errors.hpp"

#include <stdexcept>
#include <string>

namespace carrymix {

void MultSpec::validate() const {
  if (k < 1) throw ValidationError("mult spec: k must be at least 1");
  if (b < 2) throw ValidationError("mult spec: b must be at least 2");
}

CarryTrace mult_carry_trace(const MultSpec& spec, std::span<const int> digits) {
  spec.validate();
  CarryTrace trace;
  trace.reserve(digits.size());
  long long carry = 0;
  for (int d : digits) {
    if (d < 0 || d >= spec.b) {
      throw ValidationError("mult_carry_trace: digit " + std::to_string(d) + " outside [0, " +
                            std::to_string(spec.b - 1) + "]");
    }
    carry = (carry + static_cast<long long>(spec.k) * d) / spec.b;
    trace.push_back(static_cast<int>(carry));
  }
  return trace;
}

RationalMatrix build_K(const MultSpec& spec) {
  spec.validate();
  if (spec.k > kMaxMultiplier) {
    throw ResourceCapError("build_K: k exceeds cap " + std::to_string(kMaxMultiplier));
  }
  const auto k = static_cast<std::size_t>(spec.k);
  std::vector<long> counts(k * k, 0);
  for (long i = 0; i < spec.k; ++i) {
    for (long d = 0; d < spec.b; ++d) {
      const long j = (i + spec.k * d) / spec.b;
      ++counts[static_cast<std::size_t>(i) * k + static_cast<std::size_t>(j)];
    }
  }
  RationalMatrix out(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) out(i, j) = make_rational(counts[i * k + j], spec.b);
  return out;
}

Rational mult_tv_bound(const MultSpec& spec, unsigned r) {
  spec.validate();
  return make_rational(spec.k, 2 * big_pow(static_cast<unsigned long>(spec.b), r));
}

Rational mult_tv_exact(const MultSpec& spec, unsigned r) {
  if (r < 1) throw ValidationError("mult_tv_exact: r must be at least 1");
  const RationalMatrix kr = mat_pow(build_K(spec), r);
  const Rational uniform = make_rational(1, spec.k);
  Rational total = 0;
  for (std::size_t j = 0; j < kr.cols(); ++j) total += abs(Rational(kr(0, j) - uniform));
  total /= 2;
  if (total > mult_tv_bound(spec, r)) {
    throw ConsistencyError("mult_tv_exact: distance " + to_string(total) + " exceeds bound " +
                           to_string(mult_tv_bound(spec, r)));
  }
  return total;
}

RationalVector mult_counting_row(const MultSpec& spec, unsigned r) {
  spec.validate();
  const BigInt window = big_pow(static_cast<unsigned long>(spec.b), r);
  if (window > kMultCountingCap) {
    throw ResourceCapError("mult_counting_row: b^r = " + window.get_str() + " exceeds cap " +
                           std::to_string(kMultCountingCap));
  }
  const unsigned long br = window.get_ui();
  std::vector<unsigned long> counts(static_cast<std::size_t>(spec.k), 0);
  for (unsigned long x = 0; x < br; ++x) {
    const unsigned long long product = static_cast<unsigned long long>(spec.k) * x;
    ++counts[static_cast<std::size_t>(product / br)];
  }
  RationalVector row(counts.size());
  for (std::size_t j = 0; j < counts.size(); ++j) row[j] = make_rational(counts[j], window);
  return row;
}

bool is_generalized_circulant(const RationalMatrix& k_matrix, long shift) {
  if (!k_matrix.is_square()) return false;
  const std::size_t k = k_matrix.rows();
  if (k == 0) return true;
  const std::size_t s = static_cast<std::size_t>(((shift % static_cast<long>(k)) + static_cast<long>(k)) % static_cast<long>(k));
  for (std::size_t c = 0; c + 1 < k; ++c) {
    for (std::size_t i = 0; i < k; ++i) {
      if (k_matrix((i + s) % k, c + 1) != k_matrix(i, c)) return false;
    }
  }
  return true;
}

}  // namespace carrymix
