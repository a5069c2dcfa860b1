#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace aksw {

namespace detail {
template <class T>
bool field_is_zero(const T& x) {
  return is_zero(x);
}
}  // namespace detail

/// Dense row-major matrix over a field F. Zero entries are skipped in
/// products, which keeps sparse exact matrices cheap.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!detail::field_is_zero(x)) return false;
    return true;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!detail::field_is_zero(o.data_[i])) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i)
      if (!detail::field_is_zero(o.data_[i])) data_[i] -= o.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }

  friend Matrix operator*(const F& s, Matrix a) {
    for (auto& x : a.data_)
      if (!detail::field_is_zero(x)) x = s * x;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const F& x = a(i, k);
        if (detail::field_is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const F& y = b(k, j);
          if (detail::field_is_zero(y)) continue;
          c(i, j) += x * y;
        }
      }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Columns [c0, c0 + n).
  Matrix columns(std::size_t c0, std::size_t n) const {
    Matrix m(rows_, n);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = (*this)(i, c0 + j);
    return m;
  }

  static Matrix vstack(const std::vector<Matrix>& parts, std::size_t cols) {
    std::size_t rows = 0;
    for (const auto& p : parts) rows += p.rows_;
    Matrix m(rows, cols);
    std::size_t r0 = 0;
    for (const auto& p : parts) {
      if (p.cols_ != cols) throw std::invalid_argument("vstack: column mismatch");
      for (std::size_t i = 0; i < p.rows_; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(r0 + i, j) = p(i, j);
      r0 += p.rows_;
    }
    return m;
  }

  template <class G, class Fn>
  Matrix<G> map(Fn&& fn) const {
    Matrix<G> m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!detail::field_is_zero((*this)(i, j))) m(i, j) = fn((*this)(i, j));
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;

  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  }
};

}  // namespace aksw
