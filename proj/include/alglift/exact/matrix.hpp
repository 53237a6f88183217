#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "alglift/error.hpp"
#include "alglift/exact/knumber.hpp"
#include "alglift/exact/rational.hpp"

namespace alglift {

/*
 * Dense row-major matrix over an exact scalar type. Zero-row and zero-column
 * shapes are legal; they appear naturally as boundary maps of empty degrees.
 */
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(ErrorCode::ShapeMismatch, "ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorCode::ShapeMismatch, "ragged row");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  std::vector<T> row_vector(std::size_t i) const { return {row(i).begin(), row(i).end()}; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == T(0))) return false;
    return true;
  }
  bool row_is_zero(std::size_t i) const {
    for (const auto& x : row(i))
      if (!(x == T(0))) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Rows [first, first + count).
  Matrix row_block(std::size_t first, std::size_t count) const {
    Matrix m(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(first + i, j);
    return m;
  }

  Matrix col_block(std::size_t first, std::size_t count) const {
    Matrix m(rows_, count);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < count; ++j) m(i, j) = (*this)(i, first + j);
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ZMatrix = Matrix<Integer>;
using QMatrix = Matrix<Rational>;
using KMatrix = Matrix<KNumber>;

namespace detail {
// gmpxx products are expression templates, so the result scalar is picked
// explicitly instead of deduced.
template <class A, class B>
struct ProductType {
  using type = std::conditional_t<std::is_same_v<A, KNumber> || std::is_same_v<B, KNumber>, KNumber,
                                  std::conditional_t<std::is_same_v<A, Rational> || std::is_same_v<B, Rational>,
                                                     Rational, Integer>>;
};
}  // namespace detail

template <class A, class B>
auto operator*(const Matrix<A>& a, const Matrix<B>& b) {
  using R = typename detail::ProductType<A, B>::type;
  if (a.cols() != b.rows()) throw Error(ErrorCode::ShapeMismatch, "matrix product shape mismatch");
  Matrix<R> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == A(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += R(a(i, k) * b(k, j));
    }
  return c;
}

template <class T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "matrix sum");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) += b(i, j);
  return a;
}

template <class T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorCode::ShapeMismatch, "matrix difference");
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
  return a;
}

template <class To, class From>
Matrix<To> convert(const Matrix<From>& m) {
  Matrix<To> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = To(m(i, j));
  return out;
}

/// Vertical concatenation.
template <class T>
Matrix<T> stack(const Matrix<T>& top, const Matrix<T>& bottom) {
  if (top.rows() != 0 && bottom.rows() != 0 && top.cols() != bottom.cols())
    throw Error(ErrorCode::ShapeMismatch, "stack");
  std::size_t cols = top.rows() != 0 ? top.cols() : bottom.cols();
  Matrix<T> m(top.rows() + bottom.rows(), cols);
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m(top.rows() + i, j) = bottom(i, j);
  return m;
}

/// Horizontal concatenation.
template <class T>
Matrix<T> concat(const Matrix<T>& left, const Matrix<T>& right) {
  if (left.rows() != right.rows()) throw Error(ErrorCode::ShapeMismatch, "concat");
  Matrix<T> m(left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < left.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) m(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j) m(i, left.cols() + j) = right(i, j);
  }
  return m;
}

}  // namespace alglift
