#include "carrymix/errors.hpp"
#include "carrymix/mult_carries.hpp"
#include "carrymix/shuffling.hpp"

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"

using namespace carrymix;
using oracle::frac;

TEST_CASE("multiplication carry trace") {
  const std::vector<int> digits{3, 2, 4, 1};  // 1423, least significant first
  CHECK(mult_carry_trace({26, 10}, digits) == CarryTrace{7, 5, 10, 3});
  CHECK(mult_carry_trace({1, 10}, digits) == CarryTrace{0, 0, 0, 0});
  CHECK(mult_carry_trace({10, 10}, std::vector<int>{7}) == CarryTrace{7});
  CHECK_THROWS_AS(mult_carry_trace({3, 10}, std::vector<int>{10}), ValidationError);
  CHECK_THROWS_AS(mult_carry_trace({3, 10}, std::vector<int>{-1}), ValidationError);
  // schoolbook: the final carry is the leading part of the product
  CHECK(1423 * 26 / 10000 == mult_carry_trace({26, 10}, digits).back());
}

TEST_CASE("multiplication transition matrix") {
  CHECK(build_K({7, 10}) == oracle::mult_k7_b10());
  CHECK(build_K({1, 6}) == RationalMatrix{{1}});
  CHECK(build_K({2, 2}) == RationalMatrix{{frac(1, 2), frac(1, 2)}, {frac(1, 2), frac(1, 2)}});
  for (long k = 1; k <= 12; ++k)
    for (long b = 2; b <= 12; ++b) {
      const RationalMatrix m = build_K({k, b});
      CHECK(m == oracle::mult_by_enumeration(k, b));
      CHECK(m.is_doubly_stochastic());
      CHECK(is_generalized_circulant(m, b % k));
    }
  CHECK_FALSE(is_generalized_circulant(build_K({7, 10}), 2));
}

TEST_CASE("multiplication semigroup") {
  for (long k = 1; k <= 9; ++k)
    for (long a = 2; a <= 4; ++a)
      for (long b = 2; b <= 4; ++b) CHECK(oracle::multiply(build_K({k, a}), build_K({k, b})) == build_K({k, a * b}));
}

TEST_CASE("total variation and its bound") {
  CHECK(mult_tv_exact({7, 10}, 1) == frac(6, 35));
  CHECK(mult_tv_bound({7, 10}, 1) == frac(7, 20));
  CHECK(mult_tv_exact({10, 10}, 1) == 0);
  CHECK(mult_tv_exact({1, 3}, 5) == 0);
  for (long k = 1; k <= 12; ++k)
    for (long b = 2; b <= 12; ++b)
      for (unsigned r = 1; r <= 4; ++r) {
        const RationalMatrix kr = oracle::power(oracle::mult_by_enumeration(k, b), r);
        Rational tv = 0;
        for (long j = 0; j < k; ++j) tv += abs(kr(0, j) - frac(1, k));
        tv /= 2;
        CHECK(mult_tv_exact({k, b}, r) == tv);
        CHECK(tv <= frac(k, 2) / Rational(oracle::ipow(b, r)));
      }
}

TEST_CASE("counting identity for K^r") {
  for (long k : {3L, 7L, 12L})
    for (long b : {2L, 10L})
      for (unsigned r = 1; r <= 4; ++r) {
        const BigInt br = oracle::ipow(b, r);
        if (br > 1000000) continue;
        const long limit = br.get_si();
        std::vector<long> counts(static_cast<std::size_t>(k), 0);
        for (long x = 0; x < limit; ++x) ++counts[static_cast<std::size_t>(k * x / limit)];
        const RationalVector row = mult_counting_row({k, b}, r);
        const RationalMatrix kr = oracle::power(build_K({k, b}), r);
        for (long j = 0; j < k; ++j) {
          CHECK(row[j] == Rational(counts[j]) / Rational(br));
          CHECK(row[j] == kr(0, j));
        }
      }
}

TEST_CASE("empirical transitions of random digits") {
  constexpr int kSteps = 100000;
  const MultSpec spec{7, 10};
  Rng rng(314);
  std::uniform_int_distribution<int> digit(0, 9);
  std::vector<int> digits(kSteps);
  for (int& d : digits) d = digit(rng);
  const CarryTrace trace = mult_carry_trace(spec, digits);
  std::vector<std::vector<int>> counts(7, std::vector<int>(7, 0));
  std::vector<int> visits(7, 0);
  int prev = 0;
  for (int c : trace) {
    ++counts[prev][c];
    ++visits[prev];
    prev = c;
  }
  const RationalMatrix k = build_K(spec);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      const double p = to_double(k(i, j));
      const double se = std::sqrt(p * (1 - p) / visits[i]);
      CHECK(std::abs(static_cast<double>(counts[i][j]) / visits[i] - p) <= 4 * se + 1e-12);
    }
}
