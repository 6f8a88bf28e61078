#include "carrymix/matrix.hpp"

#include "carrymix/errors.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace carrymix {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  RationalMatrix out(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw ShapeError("ragged rows: row " + std::to_string(r));
    for (std::size_t c = 0; c < cols; ++c) out(r, c) = rows[r][c];
  }
  return out;
}

RationalVector RationalMatrix::column(std::size_t c) const {
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

RationalMatrix RationalMatrix::scaled(const Rational& factor) const {
  RationalMatrix out = *this;
  for (auto& x : out.data_) x *= factor;
  return out;
}

bool RationalMatrix::is_row_stochastic() const {
  for (std::size_t r = 0; r < rows_; ++r) {
    Rational sum = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Rational& x = (*this)(r, c);
      if (sgn(x) < 0) return false;
      sum += x;
    }
    if (sum != 1) return false;
  }
  return true;
}

bool RationalMatrix::is_doubly_stochastic() const {
  if (!is_row_stochastic()) return false;
  for (std::size_t c = 0; c < cols_; ++c) {
    Rational sum = 0;
    for (std::size_t r = 0; r < rows_; ++r) sum += (*this)(r, c);
    if (sum != 1) return false;
  }
  return true;
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("mat_mul: incompatible shapes " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " and " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

RationalVector vec_mat_mul(std::span<const Rational> v, const RationalMatrix& m) {
  if (v.size() != m.rows()) throw ShapeError("vec_mat_mul: vector length does not match matrix rows");
  RationalVector out(m.cols(), Rational(0));
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[k] * m(k, j);
  }
  return out;
}

RationalMatrix mat_pow(const RationalMatrix& a, unsigned exponent) {
  if (!a.is_square()) throw ShapeError("mat_pow: matrix must be square");
  RationalMatrix result = RationalMatrix::identity(a.rows());
  RationalMatrix base = a;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Rational determinant(const RationalMatrix& a) {
  if (!a.is_square()) throw ShapeError("determinant: matrix must be square");
  RationalMatrix m = a;
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      det = -det;
    }
    det *= m(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Rational factor = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= factor * m(col, c);
    }
  }
  return det;
}

Polynomial char_poly(const RationalMatrix& a) {
  if (!a.is_square()) throw ShapeError("char_poly: matrix must be square");
  const std::size_t n = a.rows();
  if (n > kCharPolyMaxSide) {
    throw ResourceCapError("char_poly: side " + std::to_string(n) + " exceeds cap " + std::to_string(kCharPolyMaxSide));
  }
  Polynomial coeffs(n + 1, Rational(0));
  coeffs[n] = 1;
  RationalMatrix m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    RationalMatrix next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += coeffs[n - k + 1];
    const RationalMatrix am = a * next;
    Rational trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    coeffs[n - k] = -trace / static_cast<long>(k);
    m = std::move(next);
  }
  return coeffs;
}

Polynomial poly_mul(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.empty() || b.empty()) return {};
  Polynomial out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Polynomial poly_from_roots(std::span<const Rational> roots) {
  Polynomial out{Rational(1)};
  for (const auto& root : roots) {
    const Polynomial factor{-root, Rational(1)};
    out = poly_mul(out, factor);
  }
  return out;
}

Rational poly_eval(std::span<const Rational> poly, const Rational& x) {
  Rational acc = 0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) acc = acc * x + *it;
  return acc;
}

namespace {

// Advances idx to the next size-k subset of {0..n-1} in lexicographic order.
bool next_subset(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t pos = k; pos-- > 0;) {
    if (idx[pos] < n - k + pos) {
      ++idx[pos];
      for (std::size_t q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<std::size_t> first_subset(std::size_t k) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  return idx;
}

}  // namespace

TotalPositivityReport is_totally_positive(const RationalMatrix& a, std::size_t order) {
  if (order < 1) throw ValidationError("is_totally_positive: order must be at least 1");
  if (order > kMinorMaxOrder || a.rows() > kMinorMaxSide || a.cols() > kMinorMaxSide) {
    throw ResourceCapError("is_totally_positive: caps are side <= " + std::to_string(kMinorMaxSide) +
                           " and order <= " + std::to_string(kMinorMaxOrder));
  }
  TotalPositivityReport report;
  const std::size_t max_size = std::min({order, a.rows(), a.cols()});
  for (std::size_t size = 1; size <= max_size; ++size) {
    RationalMatrix sub(size, size);
    auto rows = first_subset(size);
    do {
      auto cols = first_subset(size);
      do {
        for (std::size_t r = 0; r < size; ++r)
          for (std::size_t c = 0; c < size; ++c) sub(r, c) = a(rows[r], cols[c]);
        Rational value = determinant(sub);
        ++report.minors_checked;
        if (sgn(value) < 0) {
          report.totally_positive = false;
          report.violation = MinorViolation{rows, cols, std::move(value)};
          return report;
        }
      } while (next_subset(cols, a.cols()));
    } while (next_subset(rows, a.rows()));
  }
  return report;
}

}  // namespace carrymix
