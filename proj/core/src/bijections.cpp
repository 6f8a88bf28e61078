#include "carrymix/bijections.hpp"

#include "carrymix/errors.hpp"
#include "carrymix/shuffling.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace carrymix {

namespace {

Permutation ranks_from_order(const std::vector<std::size_t>& order) {
  std::vector<int> rank(order.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = static_cast<int>(pos + 1);
  return Permutation(std::move(rank));
}

std::vector<int> to_digits(BigInt value, long b, std::size_t width) {
  std::vector<int> digits(width, 0);
  for (std::size_t k = width; k-- > 0;) {
    const BigInt q = value / b;
    digits[k] = static_cast<int>(BigInt(value - q * b).get_si());
    value = q;
  }
  return digits;
}

BigInt window_modulus(long b, std::size_t width) {
  return big_pow(static_cast<unsigned long>(b), static_cast<unsigned long>(width));
}

}  // namespace

CarryTrace column_carry_trace(const ColumnArray& columns) {
  const long b = columns.base();
  CarryTrace trace(columns.m());
  long long carry = 0;
  for (std::size_t c = 0; c < columns.m(); ++c) {
    long long sum = carry;
    for (std::size_t r = 0; r < columns.n(); ++r) sum += columns.at(r, c);
    carry = sum / b;
    trace[c] = static_cast<int>(carry);
  }

  // The carry out of column j only depends on the total of the rightmost-j tuples.
  for (std::size_t j = 1; j <= columns.m(); ++j) {
    BigInt total = 0;
    for (std::size_t r = 0; r < columns.n(); ++r) total += columns.row_value(r, j);
    const BigInt prefix_carry = total / window_modulus(b, j);
    if (prefix_carry != trace[j - 1]) {
      throw ConsistencyError("column_carry_trace: columnar carry " + std::to_string(trace[j - 1]) +
                             " differs from prefix-sum carry " + prefix_carry.get_str() + " at column " +
                             std::to_string(j));
    }
  }
  return trace;
}

std::vector<int> carry_positions(const TupleList& tuples) {
  std::vector<int> out;
  const BigInt modulus = window_modulus(tuples.base(), tuples.width());
  BigInt sum = 0;
  BigInt carried = 0;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    sum += tuples.value(i);
    BigInt next = sum / modulus;
    if (i > 0 && next > carried) out.push_back(static_cast<int>(i));
    carried = std::move(next);
  }
  return out;
}

std::vector<int> descent_positions(const TupleList& tuples) {
  std::vector<int> out;
  for (std::size_t i = 0; i + 1 < tuples.size(); ++i) {
    if (tuples.value(i + 1) < tuples.value(i)) out.push_back(static_cast<int>(i + 1));
  }
  return out;
}

TupleList bar_map(const ColumnArray& columns) {
  const std::size_t width = columns.m();
  const BigInt modulus = window_modulus(columns.base(), width);
  std::vector<std::vector<int>> rows(columns.n());
  BigInt sum = 0;
  for (std::size_t r = 0; r < columns.n(); ++r) {
    sum = (sum + columns.row_value(r, width)) % modulus;
    rows[r] = to_digits(sum, columns.base(), width);
  }
  return TupleList(std::move(rows), columns.base());
}

ColumnArray bar_inverse(const TupleList& tuples) {
  const BigInt modulus = window_modulus(tuples.base(), tuples.width());
  std::vector<std::vector<int>> rows(tuples.size());
  BigInt previous = 0;
  for (std::size_t r = 0; r < tuples.size(); ++r) {
    const BigInt current = tuples.value(r);
    BigInt diff = (current - previous) % modulus;
    if (diff < 0) diff += modulus;
    rows[r] = to_digits(diff, tuples.base(), tuples.width());
    previous = current;
  }
  return ColumnArray::from_rows(rows, tuples.base());
}

Permutation pi_label(const TupleList& tuples) {
  std::vector<std::size_t> order(tuples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Equal-width digit vectors compare lexicographically exactly as their base-b values do.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return tuples.tuples()[x] < tuples.tuples()[y];
  });
  return ranks_from_order(order);
}

Permutation pi_label(const ColumnArray& columns) {
  std::vector<std::size_t> order(columns.n());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    for (std::size_t c = columns.m(); c-- > 0;) {
      const int dx = columns.at(x, c);
      const int dy = columns.at(y, c);
      if (dx != dy) return dx < dy;
    }
    return false;
  });
  return ranks_from_order(order);
}

Permutation pi_label(const std::vector<int>& column) {
  std::vector<std::size_t> order(column.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return column[x] < column[y]; });
  return ranks_from_order(order);
}

ColumnArray star_map(const ColumnArray& columns) {
  ColumnArray out(columns.n(), columns.m(), columns.base());
  if (columns.m() == 0) return out;
  for (std::size_t r = 0; r < columns.n(); ++r) out.set(r, 0, columns.at(r, 0));
  for (std::size_t k = 1; k < columns.m(); ++k) {
    const Permutation placed = pi_label(out.rightmost(k));
    for (std::size_t r = 0; r < columns.n(); ++r) {
      out.set(r, k, columns.at(static_cast<std::size_t>(placed(static_cast<int>(r + 1)) - 1), k));
    }
  }
  return out;
}

ColumnArray star_inverse(const ColumnArray& starred) {
  ColumnArray out(starred.n(), starred.m(), starred.base());
  if (starred.m() == 0) return out;
  for (std::size_t r = 0; r < starred.n(); ++r) out.set(r, 0, starred.at(r, 0));
  for (std::size_t k = 1; k < starred.m(); ++k) {
    const Permutation placed = pi_label(starred.rightmost(k));
    for (std::size_t r = 0; r < starred.n(); ++r) {
      out.set(static_cast<std::size_t>(placed(static_cast<int>(r + 1)) - 1), k, starred.at(r, k));
    }
  }
  return out;
}

ShuffleTrace tau_trace(const ColumnArray& columns) {
  const CarryTrace carries = column_carry_trace(columns);
  ShuffleTrace trace{static_cast<long>(columns.n()), columns.base(), {}};
  trace.perms.reserve(columns.m());
  for (std::size_t j = 1; j <= columns.m(); ++j) {
    Permutation tau = pi_label(bar_map(columns.rightmost(j)));
    if (descents(tau) != carries[j - 1]) {
      throw ConsistencyError("tau_trace: d(tau_" + std::to_string(j) + ") = " + std::to_string(descents(tau)) +
                             " but kappa_" + std::to_string(j) + " = " + std::to_string(carries[j - 1]));
    }
    trace.perms.push_back(std::move(tau));
  }
  return trace;
}

bool starkey_product_check(const ColumnArray& columns) {
  const ColumnArray starred = star_map(columns);
  Permutation product = Permutation::identity(columns.n());
  for (std::size_t j = 1; j <= columns.m(); ++j) {
    product = pi_label(columns.column(j - 1)) * product;
    if (product != pi_label(starred.rightmost(j))) return false;
  }
  return true;
}

}  // namespace carrymix
