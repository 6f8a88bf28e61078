// Brute-force reference computations for the test suites.
// Nothing here calls into the library except for the Rational/BigInt aliases and the matrix container.
#pragma once

#include "carrymix/matrix.hpp"
#include "carrymix/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

using carrymix::BigInt;
using carrymix::Rational;
using carrymix::RationalMatrix;

inline Rational frac(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline BigInt ipow(long base, unsigned long e) {
  BigInt out = 1;
  for (unsigned long i = 0; i < e; ++i) out *= base;
  return out;
}

inline BigInt fact(long n) {
  BigInt out = 1;
  for (long i = 2; i <= n; ++i) out *= i;
  return out;
}

inline BigInt choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  return fact(n) / (fact(k) * fact(n - k));
}

inline int count_descents(const std::vector<int>& p) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i + 1] < p[i]) ++d;
  return d;
}

inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline std::vector<int> invert(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[static_cast<std::size_t>(p[i] - 1)] = static_cast<int>(i) + 1;
  return inv;
}

/// Eulerian number by counting permutations.
inline long eulerian_count(int n, int j) {
  long c = 0;
  for (const auto& p : permutations(n))
    if (count_descents(p) == j) ++c;
  return c;
}

/// Calls f(word) for every word of `len` digits in [0, b).
template <class F>
void for_each_word(int len, int b, F&& f) {
  std::vector<int> w(static_cast<std::size_t>(len), 0);
  while (true) {
    f(w);
    int i = 0;
    while (i < len && ++w[static_cast<std::size_t>(i)] == b) w[static_cast<std::size_t>(i++)] = 0;
    if (i == len) return;
  }
}

/// Transition matrix straight from the definition: P(i,j) = P(floor((i + X_1 + ... + X_n) / b) = j).
inline RationalMatrix carries_by_enumeration(int n, int b) {
  RationalMatrix p(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  const Rational w = Rational(1) / Rational(ipow(b, static_cast<unsigned long>(n)));
  for (int i = 0; i < n; ++i) {
    for_each_word(n, b, [&](const std::vector<int>& x) {
      const int s = i + std::accumulate(x.begin(), x.end(), 0);
      p(static_cast<std::size_t>(i), static_cast<std::size_t>(s / b)) += w;
    });
  }
  return p;
}

/// The closed n = 3 matrix, any base.
inline RationalMatrix holte_three(long b) {
  const long b2 = b * b;
  const long rows[3][3] = {{b2 + 3 * b + 2, 4 * b2 - 4, b2 - 3 * b + 2},
                                {b2 - 1, 4 * b2 + 2, b2 - 1},
                                {b2 - 3 * b + 2, 4 * b2 - 4, b2 + 3 * b + 2}};
  RationalMatrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = frac(rows[i][j], 6 * b2);
  return m;
}

/// Base-2 binomial form.
inline RationalMatrix holte_base_two(int n) {
  RationalMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Rational(choose(n + 1, 2 * j - i + 1)) / Rational(ipow(2, static_cast<unsigned long>(n)));
  return m;
}

inline RationalMatrix mult_k7_b10() {
  const int rows[7][7] = {{2, 1, 2, 1, 2, 1, 1}, {2, 1, 2, 1, 1, 2, 1}, {2, 1, 1, 2, 1, 2, 1}, {1, 2, 1, 2, 1, 2, 1},
                          {1, 2, 1, 2, 1, 1, 2}, {1, 2, 1, 1, 2, 1, 2}, {1, 1, 2, 1, 2, 1, 2}};
  RationalMatrix m(7, 7);
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) m(i, j) = frac(rows[i][j], 10);
  return m;
}

inline RationalMatrix card_two(long b) {
  RationalMatrix m(2, 2);
  m(0, 0) = m(1, 1) = frac(b + 1, 2 * b);
  m(0, 1) = m(1, 0) = frac(b - 1, 2 * b);
  return m;
}

inline RationalMatrix card_three(long b) {
  const long d = 6 * b * b;
  const long rows[3][3] = {{(b + 1) * (2 * b + 1), 2 * (b * b - 1), (b - 1) * (2 * b - 1)},
                                {2 * (b * b - 1), 2 * (b * b + 2), 2 * (b * b - 1)},
                                {(b - 1) * (2 * b - 1), 2 * (b * b - 1), (b + 1) * (2 * b + 1)}};
  RationalMatrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = frac(rows[i][j], d);
  return m;
}

/// Rank rows by (lexicographic tuple, row index); row r gets label rank+1.
inline std::vector<int> label(const std::vector<std::vector<int>>& tuples) {
  std::vector<std::size_t> order(tuples.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) { return tuples[a] < tuples[c]; });
  std::vector<int> out(tuples.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) out[order[rank]] = static_cast<int>(rank) + 1;
  return out;
}

inline std::vector<int> label_column(const std::vector<int>& column) {
  std::vector<std::vector<int>> tuples;
  for (int d : column) tuples.push_back({d});
  return label(tuples);
}

/// Schoolbook addition of the rows (each written most significant digit first); returns carries out of each column.
inline std::vector<int> add_rows(const std::vector<std::vector<int>>& rows, int b) {
  const std::size_t m = rows.front().size();
  std::vector<int> carries;
  int carry = 0;
  for (std::size_t c = m; c-- > 0;) {
    int s = carry;
    for (const auto& row : rows) s += row[c];
    carry = s / b;
    carries.push_back(carry);
  }
  return carries;
}

/// Law of one b-shuffle: every digit word labelled, each with weight b^-n.
inline std::map<std::vector<int>, Rational> shuffle_law(int n, int b) {
  std::map<std::vector<int>, Rational> law;
  const Rational w = Rational(1) / Rational(ipow(b, static_cast<unsigned long>(n)));
  for_each_word(n, b, [&](const std::vector<int>& word) { law[label_column(word)] += w; });
  return law;
}

/// Q(i,j) = P(sigma(j) = i), 0-based.
inline RationalMatrix card_by_enumeration(int n, int b) {
  RationalMatrix q(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (const auto& [sigma, p] : shuffle_law(n, b))
    for (int j = 0; j < n; ++j) q(static_cast<std::size_t>(sigma[static_cast<std::size_t>(j)] - 1), static_cast<std::size_t>(j)) += p;
  return q;
}

inline RationalMatrix mult_by_enumeration(long k, long b) {
  RationalMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(k));
  for (long i = 0; i < k; ++i)
    for (long d = 0; d < b; ++d) m(static_cast<std::size_t>(i), static_cast<std::size_t>((i + k * d) / b)) += frac(1, b);
  return m;
}

inline RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& c) {
  RationalMatrix out(a.rows(), c.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      for (std::size_t t = 0; t < a.cols(); ++t) out(i, j) += a(i, t) * c(t, j);
  return out;
}

inline RationalMatrix power(const RationalMatrix& a, unsigned r) {
  RationalMatrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) out(i, i) = 1;
  for (unsigned s = 0; s < r; ++s) out = multiply(out, a);
  return out;
}

/// det(x I - A) by fraction-exact Gaussian elimination.
inline Rational det_shifted(const RationalMatrix& a, const Rational& x) {
  const std::size_t n = a.rows();
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = (i == j ? x : Rational(0)) - a(i, j);
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && m[pivot][c] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const Rational f = m[r][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return det;
}

using Trace = std::vector<int>;

/// Joint carries law by schoolbook addition over every n x m array.
inline std::map<Trace, Rational> joint_carries(int n, int m, int b) {
  std::map<Trace, Rational> law;
  const Rational w = Rational(1) / Rational(ipow(b, static_cast<unsigned long>(n * m)));
  for_each_word(n * m, b, [&](const std::vector<int>& word) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) rows[r].assign(word.begin() + r * m, word.begin() + (r + 1) * m);
    law[add_rows(rows, b)] += w;
  });
  return law;
}

/// Joint law of d(tau_1..tau_m) with tau_j = pi(A_j) ... pi(A_1) over independent columns.
inline std::map<Trace, Rational> joint_descents(int n, int m, int b) {
  std::map<Trace, Rational> law;
  const Rational w = Rational(1) / Rational(ipow(b, static_cast<unsigned long>(n * m)));
  for_each_word(n * m, b, [&](const std::vector<int>& word) {
    std::vector<int> tau(static_cast<std::size_t>(n));
    std::iota(tau.begin(), tau.end(), 1);
    Trace key;
    for (int j = 0; j < m; ++j) {
      const std::vector<int> p = label_column(std::vector<int>(word.begin() + j * n, word.begin() + (j + 1) * n));
      std::vector<int> next(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) next[i] = p[static_cast<std::size_t>(tau[i] - 1)];
      tau = next;
      key.push_back(count_descents(tau));
    }
    law[key] += w;
  });
  return law;
}

/// prod_j P(i_{j-1}, i_j) with i_0 = 0, P from the definition; zero-probability traces omitted.
inline std::map<Trace, Rational> markov_law(int n, int m, int b) {
  const RationalMatrix p = carries_by_enumeration(n, b);
  std::map<Trace, Rational> law;
  for_each_word(m, n, [&](const std::vector<int>& key) {
    Rational prob = 1;
    int prev = 0;
    for (int s : key) {
      prob *= p(static_cast<std::size_t>(prev), static_cast<std::size_t>(s));
      prev = s;
    }
    if (prob != 0) law[key] = prob;
  });
  return law;
}

/// a_k = sum_i h_i C(k - i + n, n): the coefficients of h(x) / (1-x)^(n+1).
inline std::vector<Rational> series(const std::vector<Rational>& h, int n, int terms) {
  std::vector<Rational> a(static_cast<std::size_t>(terms));
  for (int k = 0; k < terms; ++k)
    for (int i = 0; i <= k && i < static_cast<int>(h.size()); ++i) a[k] += h[i] * Rational(choose(k - i + n, n));
  return a;
}

/// Numerator of sum_k a_{rk} x^k over (1-x)^(n+1), read off the truncated product; empty if the product
/// does not terminate within 30 terms.
inline std::vector<Rational> sectioned_numerator(const std::vector<Rational>& h, int n, int r) {
  constexpr int kTerms = 30;
  const std::vector<Rational> a = series(h, n, r * kTerms);
  std::vector<Rational> product(kTerms);
  for (int t = 0; t < kTerms; ++t)
    for (int s = 0; s <= n + 1 && s <= t; ++s)
      product[t] += a[static_cast<std::size_t>(r * (t - s))] * Rational(choose(n + 1, s)) * ((s % 2) ? -1 : 1);
  for (int t = n + 2; t < kTerms; ++t)
    if (product[t] != 0) return {};
  product.resize(static_cast<std::size_t>(n + 2));
  return product;
}

}  // namespace oracle
