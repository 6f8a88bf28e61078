#include "carrymix/column_array.hpp"

#include "carrymix/errors.hpp"

#include <string>

namespace carrymix {

namespace {

void check_digit(int digit, long b) {
  if (digit < 0 || digit >= b) {
    throw ValidationError("digit " + std::to_string(digit) + " outside [0, " + std::to_string(b - 1) + "]");
  }
}

void check_base(long b) {
  if (b < 1) throw ValidationError("base must be at least 1");
}

}  // namespace

ColumnArray::ColumnArray(std::size_t n, std::size_t m, long b) : n_(n), m_(m), b_(b), digits_(n * m, 0) {
  check_base(b);
}

ColumnArray ColumnArray::from_rows(const std::vector<std::vector<int>>& rows, long b) {
  const std::size_t m = rows.empty() ? 0 : rows.front().size();
  ColumnArray out(rows.size(), m, b);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m) throw ValidationError("ragged rows in column array");
    for (std::size_t k = 0; k < m; ++k) out.set(r, m - 1 - k, rows[r][k]);
  }
  return out;
}

ColumnArray ColumnArray::from_columns(const std::vector<std::vector<int>>& columns, long b) {
  const std::size_t n = columns.empty() ? 0 : columns.front().size();
  ColumnArray out(n, columns.size(), b);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != n) throw ValidationError("columns of unequal length");
    for (std::size_t r = 0; r < n; ++r) out.set(r, c, columns[c][r]);
  }
  return out;
}

void ColumnArray::set(std::size_t r, std::size_t c, int digit) {
  check_digit(digit, b_);
  digits_[r * m_ + c] = digit;
}

std::vector<int> ColumnArray::column(std::size_t c) const {
  std::vector<int> out(n_);
  for (std::size_t r = 0; r < n_; ++r) out[r] = at(r, c);
  return out;
}

std::vector<int> ColumnArray::row_digits(std::size_t r) const {
  std::vector<int> out(m_);
  for (std::size_t k = 0; k < m_; ++k) out[k] = at(r, m_ - 1 - k);
  return out;
}

BigInt ColumnArray::row_value(std::size_t r, std::size_t j) const {
  BigInt value = 0;
  for (std::size_t c = j; c-- > 0;) value = value * b_ + at(r, c);
  return value;
}

ColumnArray ColumnArray::rightmost(std::size_t j) const {
  if (j > m_) throw ValidationError("rightmost: requested more columns than available");
  ColumnArray out(n_, j, b_);
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < j; ++c) out.digits_[r * j + c] = at(r, c);
  return out;
}

TupleList::TupleList(std::vector<std::vector<int>> tuples, long b) : tuples_(std::move(tuples)), b_(b) {
  check_base(b);
  width_ = tuples_.empty() ? 0 : tuples_.front().size();
  for (const auto& t : tuples_) {
    if (t.size() != width_) throw ValidationError("tuples of unequal width");
    for (int d : t) check_digit(d, b);
  }
}

BigInt TupleList::value(std::size_t i) const {
  BigInt v = 0;
  for (int d : tuples_[i]) v = v * b_ + d;
  return v;
}

ColumnArray TupleList::to_columns() const { return ColumnArray::from_rows(tuples_, b_); }

TupleList TupleList::from_columns(const ColumnArray& columns) {
  std::vector<std::vector<int>> tuples(columns.n());
  for (std::size_t r = 0; r < columns.n(); ++r) tuples[r] = columns.row_digits(r);
  return TupleList(std::move(tuples), columns.base());
}

}  // namespace carrymix
