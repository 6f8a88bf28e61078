#pragma once

#include "carrymix/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace carrymix {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  RationalVector column(std::size_t c) const;

  RationalMatrix transpose() const;
  RationalMatrix scaled(const Rational& factor) const;

  /// Every row sums to exactly one and every entry is non-negative.
  bool is_row_stochastic() const;
  /// Row stochastic and every column also sums to exactly one.
  bool is_doubly_stochastic() const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact product; throws ShapeError when a.cols() != b.rows().
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);
inline RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) { return mat_mul(a, b); }

/// Row vector times matrix.
RationalVector vec_mat_mul(std::span<const Rational> v, const RationalMatrix& m);

/// a^exponent by repeated squaring. Square matrices only.
RationalMatrix mat_pow(const RationalMatrix& a, unsigned exponent);

Rational determinant(const RationalMatrix& a);

/// Largest side accepted by char_poly.
inline constexpr std::size_t kCharPolyMaxSide = 16;

/// Polynomial with coefficients in ascending degree order.
using Polynomial = std::vector<Rational>;

/// Monic characteristic polynomial det(x I - A) by the Faddeev-LeVerrier recurrence.
/// Coefficients are returned lowest degree first; the last entry is 1.
Polynomial char_poly(const RationalMatrix& a);

/// prod_k (x - roots[k]), ascending coefficients.
Polynomial poly_from_roots(std::span<const Rational> roots);
Rational poly_eval(std::span<const Rational> poly, const Rational& x);
Polynomial poly_mul(std::span<const Rational> a, std::span<const Rational> b);

/// Caps for brute-force minor enumeration.
inline constexpr std::size_t kMinorMaxSide = 12;
inline constexpr std::size_t kMinorMaxOrder = 4;

struct MinorViolation {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  Rational value;
};

struct TotalPositivityReport {
  bool totally_positive = true;
  std::size_t minors_checked = 0;
  std::optional<MinorViolation> violation;  // first negative minor, in enumeration order

  explicit operator bool() const noexcept { return totally_positive; }
};

/// Checks that every minor of size 1..order is non-negative. Enumeration runs
/// over sizes ascending, then row subsets and column subsets in lexicographic order.
/// Throws ResourceCapError beyond kMinorMaxSide / kMinorMaxOrder, ValidationError
/// when order < 1.
TotalPositivityReport is_totally_positive(const RationalMatrix& a, std::size_t order);

}  // namespace carrymix
