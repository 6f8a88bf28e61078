#include "carrymix/shuffling.hpp"

#include "carrymix/bijections.hpp"
#include "carrymix/combinatorics.hpp"
#include "carrymix/errors.hpp"

#include <stdexcept>
#include <string>

namespace carrymix {

Permutation gsr_sample(long n, long b, Rng& rng) {
  if (n < 1) throw ValidationError("gsr_sample: n must be at least 1");
  if (b < 1) throw ValidationError("gsr_sample: b must be at least 1");
  std::uniform_int_distribution<long> digit(0, b - 1);
  std::vector<int> word(static_cast<std::size_t>(n));
  for (auto& d : word) d = static_cast<int>(digit(rng));
  return pi_label(word);
}

Permutation gsr_sample_cut_and_drop(long n, Rng& rng) {
  if (n < 1) throw ValidationError("gsr_sample_cut_and_drop: n must be at least 1");
  std::binomial_distribution<long> cut_dist(n, 0.5);
  const long cut = cut_dist(rng);

  // Packets hold cards 1..cut and cut+1..n; their bottoms are the last cards.
  long top_left = cut;
  long bottom_left = n - cut;
  std::vector<int> deck(static_cast<std::size_t>(n));
  for (long pos = n; pos-- > 0;) {
    std::uniform_int_distribution<long> pick(0, top_left + bottom_left - 1);
    if (pick(rng) < top_left) {
      deck[static_cast<std::size_t>(pos)] = static_cast<int>(top_left);
      --top_left;
    } else {
      deck[static_cast<std::size_t>(pos)] = static_cast<int>(cut + bottom_left);
      --bottom_left;
    }
  }
  return Permutation(std::move(deck));
}

Rational qb_probability(const Permutation& p, long b) {
  if (b < 1) throw ValidationError("qb_probability: b must be at least 1");
  const long n = static_cast<long>(p.size());
  const long rising = 1 + descents(p.inverse());
  return make_rational(binomial(n + b - rising, n), big_pow(static_cast<unsigned long>(b), static_cast<unsigned long>(n)));
}

DistributionTable exhaustive_shuffle_dist(long n, long b) {
  if (n < 1) throw ValidationError("exhaustive_shuffle_dist: n must be at least 1");
  if (b < 1) throw ValidationError("exhaustive_shuffle_dist: b must be at least 1");
  const BigInt words = big_pow(static_cast<unsigned long>(b), static_cast<unsigned long>(n));
  if (words > kShuffleEnumerationCap) {
    throw ResourceCapError("exhaustive_shuffle_dist: b^n = " + words.get_str() + " exceeds cap " +
                           std::to_string(kShuffleEnumerationCap));
  }

  std::map<Permutation, unsigned long> counts;
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  while (true) {
    ++counts[pi_label(word)];
    // Odometer, last digit fastest.
    std::size_t k = word.size();
    while (k > 0 && word[k - 1] == b - 1) word[--k] = 0;
    if (k == 0) break;
    ++word[k - 1];
  }

  DistributionTable dist;
  for (const auto& [perm, count] : counts) dist.emplace(perm, make_rational(count, words));
  return dist;
}

DistributionTable convolve(const DistributionTable& first, const DistributionTable& second) {
  DistributionTable out;
  if (first.empty() || second.empty()) return out;
  if (first.begin()->first.size() != second.begin()->first.size()) {
    throw ValidationError("convolve: distributions live on different symmetric groups");
  }
  // sigma eta^{-1} = xi  <=>  sigma = xi eta.
  for (const auto& [eta, p_eta] : first) {
    for (const auto& [xi, p_xi] : second) out[xi * eta] += p_eta * p_xi;
  }
  return out;
}

Rational total_mass(const DistributionTable& dist) {
  Rational sum = 0;
  for (const auto& [perm, p] : dist) sum += p;
  return sum;
}

RationalMatrix card_tracking_matrix(long n, long b) {
  if (n < 1) throw ValidationError("card_tracking_matrix: n must be at least 1");
  if (b < 1) throw ValidationError("card_tracking_matrix: b must be at least 1");
  const auto upow = [](long base, long exponent) {
    return big_pow(static_cast<unsigned long>(base), static_cast<unsigned long>(exponent));
  };
  const BigInt scale = upow(b, n);
  RationalMatrix q(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (long i = 1; i <= n; ++i) {
    for (long j = 1; j <= n; ++j) {
      const long lo = std::max(0L, (i + j) - (n + 1));
      const long hi = std::min(i - 1, j - 1);
      BigInt sum = 0;
      for (long h = 1; h <= b; ++h) {
        for (long r = lo; r <= hi; ++r) {
          sum += binomial(j - 1, r) * binomial(n - j, i - r - 1) * upow(h, r) * upow(b - h, j - 1 - r) *
                 upow(h - 1, i - 1 - r) * upow(b - h + 1, (n - j) - (i - r - 1));
        }
      }
      q(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = make_rational(sum, scale);
    }
  }
  return q;
}

RationalMatrix card_tracking_from_distribution(const DistributionTable& dist, long n) {
  RationalMatrix q(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (const auto& [sigma, p] : dist) {
    if (static_cast<long>(sigma.size()) != n) throw ValidationError("card_tracking_from_distribution: size mismatch");
    // The card at position sigma(j) lands at position j.
    for (long j = 1; j <= n; ++j) {
      q(static_cast<std::size_t>(sigma(static_cast<int>(j)) - 1), static_cast<std::size_t>(j - 1)) += p;
    }
  }
  return q;
}

}  // namespace carrymix
