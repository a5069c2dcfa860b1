#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "aksw/matrix.hpp"

namespace aksw {

template <class F>
struct Echelon {
  Matrix<F> rref;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination; among candidate pivots the cheapest entry
/// (by pivot_cost) is used, which limits expression growth over RatFun.
template <class F>
Echelon<F> row_reduce(Matrix<F> a) {
  Echelon<F> out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t best = a.rows();
    std::size_t best_cost = 0;
    for (std::size_t i = r; i < a.rows(); ++i) {
      if (is_zero(a(i, c))) continue;
      std::size_t cost = pivot_cost(a(i, c));
      if (best == a.rows() || cost < best_cost) {
        best = i;
        best_cost = cost;
      }
    }
    if (best == a.rows()) continue;
    if (best != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(best, j));
    F inv = F(1) / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j)
      if (!is_zero(a(r, j))) a(r, j) = a(r, j) * inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      F f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rref = std::move(a);
  return out;
}

template <class F>
std::size_t rank(const Matrix<F>& a) {
  return row_reduce(a).rank();
}

/// Basis of the right kernel, as columns.
template <class F>
Matrix<F> nullspace(const Matrix<F>& a) {
  Echelon<F> e = row_reduce(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix<F> k(a.cols(), free.size());
  for (std::size_t f = 0; f < free.size(); ++f) {
    k(free[f], f) = F(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
      if (!is_zero(e.rref(r, free[f]))) k(e.pivots[r], f) = -e.rref(r, free[f]);
  }
  return k;
}

/// Solves A X = B for square invertible A; nullopt when A is singular.
template <class F>
std::optional<Matrix<F>> solve(const Matrix<F>& a, const Matrix<F>& b) {
  std::size_t n = a.rows();
  Matrix<F> aug(n, n + b.cols());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) aug(i, n + j) = b(i, j);
  }
  Echelon<F> e = row_reduce(std::move(aug));
  if (e.rank() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  return e.rref.columns(n, b.cols());
}

template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  return solve(a, Matrix<F>::identity(a.rows()));
}

/// Fraction-free (Bareiss) determinant.
template <class F>
F determinant(Matrix<F> a) {
  std::size_t n = a.rows();
  if (n == 0) return F(1);
  F sign(1);
  F prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(a(k, k))) {
      std::size_t s = k + 1;
      while (s < n && is_zero(a(s, k))) ++s;
      if (s == n) return F(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(s, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

}  // namespace aksw

namespace aksw {

/// Span of row vectors kept in reduced echelon form; add() reports whether
/// the vector enlarged the span.
template <class F>
class IncrementalSpan {
 public:
  explicit IncrementalSpan(std::size_t length) : length_(length) {}

  bool add(std::vector<F> v) {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const F& c = v[pivots_[k]];
      if (is_zero(c)) continue;
      F f = c;
      const auto& row = rows_[k];
      for (std::size_t j = 0; j < length_; ++j)
        if (!is_zero(row[j])) v[j] -= f * row[j];
    }
    std::size_t p = 0;
    while (p < length_ && is_zero(v[p])) ++p;
    if (p == length_) return false;
    F inv = F(1) / v[p];
    for (auto& x : v)
      if (!is_zero(x)) x = x * inv;
    // Keep the basis reduced so later pivots stay consistent.
    for (auto& row : rows_) {
      if (is_zero(row[p])) continue;
      F f = row[p];
      for (std::size_t j = 0; j < length_; ++j)
        if (!is_zero(v[j])) row[j] -= f * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::vector<F>>& rows() const { return rows_; }

 private:
  std::size_t length_;
  std::vector<std::vector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace aksw
