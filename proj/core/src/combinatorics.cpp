#include "carrymix/combinatorics.hpp"

#include <stdexcept>
#include <vector>

namespace carrymix {

BigInt binomial(long long n, long long k) {
  if (n < 0) throw std::domain_error("binomial: n must be non-negative");
  if (k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

BigInt factorial(unsigned long n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInt eulerian(long long n, long long j) {
  if (n < 1) throw std::domain_error("eulerian: n must be positive");
  if (j < 0 || j > n - 1) return 0;
  BigInt sum = 0;
  for (long long l = 0; l <= j; ++l) {
    BigInt term = binomial(n + 1, l) * big_pow(static_cast<unsigned long>(j + 1 - l), static_cast<unsigned long>(n));
    if (l % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

BigInt composition_count(long long b, long long parts, long long total) {
  if (b < 1) throw std::domain_error("composition_count: b must be at least 1");
  if (parts < 1) throw std::domain_error("composition_count: parts must be positive");
  const long long max_total = parts * (b - 1);
  if (total < 0 || total > max_total) return 0;

  // ways[s] = number of ways the first p parts sum to s; windowed prefix sums keep it O(parts * total).
  std::vector<BigInt> ways(static_cast<std::size_t>(total) + 1, 0);
  ways[0] = 1;
  for (long long p = 0; p < parts; ++p) {
    std::vector<BigInt> next(ways.size(), 0);
    BigInt window = 0;
    for (long long s = 0; s <= total; ++s) {
      window += ways[static_cast<std::size_t>(s)];
      if (s - b >= 0) window -= ways[static_cast<std::size_t>(s - b)];
      next[static_cast<std::size_t>(s)] = window;
    }
    ways = std::move(next);
  }
  return ways[static_cast<std::size_t>(total)];
}

}  // namespace carrymix
