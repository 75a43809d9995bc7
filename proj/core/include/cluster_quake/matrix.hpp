#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "cluster_quake/errors.hpp"

namespace cluster_quake {

using Int = std::int64_t;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

template <class T>
T add_any(T a, T b) {
  if constexpr (std::is_same_v<T, Int>) return add(a, b);
  else return a + b;
}

template <class T>
T mul_any(T a, T b) {
  if constexpr (std::is_same_v<T, Int>) return mul(a, b);
  else return a * b;
}

}  // namespace checked

inline Int positive_part(Int a) { return a > 0 ? a : 0; }
inline int sign_of(Int a) { return (a > 0) - (a < 0); }

// Dense row-major matrix. Integer arithmetic is overflow-checked.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DomainError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_) throw DomainError("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& cols) {
    Matrix m(cols.empty() ? 0 : cols.front().size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != m.rows_) throw DomainError("ragged matrix columns");
      for (std::size_t i = 0; i < m.rows_; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> row_span(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::vector<T> row(std::size_t i) const {
    auto s = row_span(i);
    return {s.begin(), s.end()};
  }
  std::vector<T> col(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_row(std::size_t i, std::span<const T> values) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = values[j];
  }
  void set_col(std::size_t j, std::span<const T> values) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = values[i];
  }

  std::vector<std::vector<T>> to_rows() const {
    std::vector<std::vector<T>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i] = row(i);
    return out;
  }

  const std::vector<T>& data() const { return data_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator-() const {
    Matrix m(*this);
    for (auto& v : m.data_) v = checked::mul_any<T>(v, T{-1});
    return m;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b);
    Matrix m(a);
    for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] = checked::add_any<T>(a.data_[i], b.data_[i]);
    return m;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T aik = a(i, k);
        if (aik == T{}) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          m(i, j) = checked::add_any<T>(m(i, j), checked::mul_any<T>(aik, b(k, j)));
      }
    return m;
  }

  std::vector<T> apply(std::span<const T> v) const {
    if (v.size() != cols_) throw DomainError("matrix-vector shape mismatch");
    std::vector<T> out(rows_, T{});
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        out[i] = checked::add_any<T>(out[i], checked::mul_any<T>((*this)(i, j), v[j]));
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw DomainError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Int>;
using RealMatrix = Matrix<double>;

Int determinant(const IntMatrix& m);

// Inverse of an integer matrix with determinant +-1; throws ConsistencyError otherwise.
IntMatrix inverse_unimodular(const IntMatrix& m);

// D * M * D^{-1} for D = diag(d); nullopt when the result is not integral.
std::optional<IntMatrix> conjugate_by_diagonal(const IntMatrix& m, std::span<const Int> d);

RealMatrix to_real(const IntMatrix& m);
double max_abs_difference(const RealMatrix& a, const RealMatrix& b);
bool all_nonpositive(const IntMatrix& m);

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace cluster_quake
