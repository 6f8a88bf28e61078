#pragma once

#include "carrymix/rational.hpp"

namespace carrymix {

/// C(n, k) with the zero-extension convention: 0 when k < 0 or k > n.
/// Throws std::domain_error when n < 0.
BigInt binomial(long long n, long long k);

BigInt factorial(unsigned long n);

/// Eulerian number A(n, j): permutations of n letters with exactly j descents.
/// Evaluated by Euler's alternating sum; 0 for j outside [0, n-1].
BigInt eulerian(long long n, long long j);

/// Number of solutions of a_1 + ... + a_parts = total with 0 <= a_l <= b-1,
/// i.e. [x^total] ((1 - x^b) / (1 - x))^parts. Dynamic programming over parts.
BigInt composition_count(long long b, long long parts, long long total);

}  // namespace carrymix
