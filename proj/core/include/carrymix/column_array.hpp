#pragma once

#include "carrymix/rational.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace carrymix {

/// n numbers of m base-b digits, viewed as m columns.
///
/// Columns are indexed from the right: column 0 here is C_1, the least
/// significant digit of every row; column m-1 is C_m. Rows are 0-based top to bottom.
class ColumnArray {
 public:
  ColumnArray() = default;
  /// All-zero array.
  ColumnArray(std::size_t n, std::size_t m, long b);
  /// rows[r][k] is the digit of row r in column C_{m-k}, i.e. rows are written
  /// most significant digit first, exactly as they are displayed.
  static ColumnArray from_rows(const std::vector<std::vector<int>>& rows, long b);
  /// columns[c] is column C_{c+1}, top to bottom.
  static ColumnArray from_columns(const std::vector<std::vector<int>>& columns, long b);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  long base() const noexcept { return b_; }

  /// Digit of row r in column C_{c+1}.
  int at(std::size_t r, std::size_t c) const { return digits_[r * m_ + c]; }
  /// Throws ValidationError when the digit is outside [0, b-1].
  void set(std::size_t r, std::size_t c, int digit);

  std::vector<int> column(std::size_t c) const;
  /// Row r written most significant digit first.
  std::vector<int> row_digits(std::size_t r) const;
  /// Integer value of the rightmost j digits of row r.
  BigInt row_value(std::size_t r, std::size_t j) const;
  /// Columns C_1..C_j as a new array.
  ColumnArray rightmost(std::size_t j) const;

  friend bool operator==(const ColumnArray&, const ColumnArray&) = default;
  friend auto operator<=>(const ColumnArray&, const ColumnArray&) = default;

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  long b_ = 2;
  std::vector<int> digits_;  // row-major, n_ x m_
};

/// n tuples of j base-b digits; each tuple is stored most significant digit first
/// and compares by its base-b integer value.
class TupleList {
 public:
  TupleList() = default;
  TupleList(std::vector<std::vector<int>> tuples, long b);

  std::size_t size() const noexcept { return tuples_.size(); }
  std::size_t width() const noexcept { return width_; }
  long base() const noexcept { return b_; }
  std::span<const int> tuple(std::size_t i) const { return tuples_[i]; }
  const std::vector<std::vector<int>>& tuples() const noexcept { return tuples_; }
  BigInt value(std::size_t i) const;

  /// Same digits viewed as a ColumnArray of width j.
  ColumnArray to_columns() const;
  static TupleList from_columns(const ColumnArray& columns);

  friend bool operator==(const TupleList&, const TupleList&) = default;

 private:
  std::vector<std::vector<int>> tuples_;
  std::size_t width_ = 0;
  long b_ = 2;
};

/// kappa_1..kappa_m; kappa_0 = 0 is implicit.
using CarryTrace = std::vector<int>;

}  // namespace carrymix
