#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qh/field.hpp"

namespace qh {

// Dense row-major matrix over a field element type.
template <class E> struct Matrix {
  std::size_t rows = 0, cols = 0;
  std::vector<E> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, const E &fill) : rows(r), cols(c), a(r * c, fill) {}

  E &operator()(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const E &operator()(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  bool empty() const { return rows == 0 || cols == 0; }
};

template <class F> using FMat = Matrix<typename F::Elem>;

template <class F> FMat<F> zeros(const F &f, std::size_t r, std::size_t c) {
  return FMat<F>(r, c, f.zero());
}

template <class F> FMat<F> identity(const F &f, std::size_t n) {
  FMat<F> m = zeros(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = f.one();
  return m;
}

template <class F> FMat<F> multiply(const F &f, const FMat<F> &x, const FMat<F> &y) {
  if (x.cols != y.rows)
    throw std::invalid_argument("matrix product: shape mismatch");
  FMat<F> r = zeros(f, x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      const auto &v = x(i, k);
      if (f.is_zero(v))
        continue;
      for (std::size_t j = 0; j < y.cols; ++j)
        r(i, j) = f.add(r(i, j), f.mul(v, y(k, j)));
    }
  return r;
}

template <class F> FMat<F> transpose(const F &f, const FMat<F> &x) {
  FMat<F> r = zeros(f, x.cols, x.rows);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t j = 0; j < x.cols; ++j)
      r(j, i) = x(i, j);
  return r;
}

template <class F> bool is_zero_matrix(const F &f, const FMat<F> &x) {
  return std::all_of(x.a.begin(), x.a.end(), [&](const auto &v) { return f.is_zero(v); });
}

template <class F> bool equal(const F &f, const FMat<F> &x, const FMat<F> &y) {
  if (x.rows != y.rows || x.cols != y.cols)
    return false;
  for (std::size_t i = 0; i < x.a.size(); ++i)
    if (!f.equal(x.a[i], y.a[i]))
      return false;
  return true;
}

// In-place reduced row echelon form; returns pivot columns.
template <class F> std::vector<std::size_t> rref(const F &f, FMat<F> &m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols && row < m.rows; ++c) {
    std::size_t p = row;
    while (p < m.rows && f.is_zero(m(p, c)))
      ++p;
    if (p == m.rows)
      continue;
    if (p != row)
      for (std::size_t j = 0; j < m.cols; ++j)
        std::swap(m(p, j), m(row, j));
    auto inv = f.inv(m(row, c));
    for (std::size_t j = c; j < m.cols; ++j)
      m(row, j) = f.mul(m(row, j), inv);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == row || f.is_zero(m(r, c)))
        continue;
      auto factor = m(r, c);
      for (std::size_t j = c; j < m.cols; ++j)
        m(r, j) = f.sub(m(r, j), f.mul(factor, m(row, j)));
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

template <class F> std::size_t rank(const F &f, FMat<F> m) { return rref(f, m).size(); }

// Columns of the result span the right kernel of m.
template <class F> FMat<F> nullspace(const F &f, FMat<F> m) {
  auto piv = rref(f, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto c : piv)
    is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols; ++c)
    if (!is_pivot[c])
      free_cols.push_back(c);
  FMat<F> k = zeros(f, m.cols, free_cols.size());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    std::size_t fc = free_cols[t];
    k(fc, t) = f.one();
    for (std::size_t r = 0; r < piv.size(); ++r)
      k(piv[r], t) = f.neg(m(r, fc));
  }
  return k;
}

template <class F> FMat<F> inverse(const F &f, const FMat<F> &m) {
  if (m.rows != m.cols)
    throw std::invalid_argument("inverse: non-square matrix");
  std::size_t n = m.rows;
  FMat<F> aug = zeros(f, n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = f.one();
  }
  auto piv = rref(f, aug);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1))
    throw std::domain_error("inverse: singular matrix");
  FMat<F> r = zeros(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      r(i, j) = aug(i, n + j);
  return r;
}

template <class F> bool is_invertible(const F &f, const FMat<F> &m) {
  return m.rows == m.cols && rank(f, m) == m.rows;
}

// Solves m x = b; returns false when inconsistent. Free variables are set to zero.
template <class F>
bool solve(const F &f, const FMat<F> &m, const std::vector<typename F::Elem> &b,
           std::vector<typename F::Elem> &x, std::size_t *solution_dim = nullptr) {
  FMat<F> aug = zeros(f, m.rows, m.cols + 1);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j)
      aug(i, j) = m(i, j);
    aug(i, m.cols) = b[i];
  }
  auto piv = rref(f, aug);
  if (!piv.empty() && piv.back() == m.cols)
    return false;
  x.assign(m.cols, f.zero());
  for (std::size_t r = 0; r < piv.size(); ++r)
    x[piv[r]] = aug(r, m.cols);
  if (solution_dim)
    *solution_dim = m.cols - piv.size();
  return true;
}

// Column space basis (as columns) of m.
template <class F> FMat<F> column_basis(const F &f, const FMat<F> &m) {
  FMat<F> t = m;
  auto piv = rref(f, t);
  FMat<F> r = zeros(f, m.rows, piv.size());
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (std::size_t i = 0; i < m.rows; ++i)
      r(i, k) = m(i, piv[k]);
  return r;
}

template <class F> FMat<F> hstack(const F &f, const FMat<F> &x, const FMat<F> &y) {
  if (x.rows != y.rows)
    throw std::invalid_argument("hstack: row mismatch");
  FMat<F> r = zeros(f, x.rows, x.cols + y.cols);
  for (std::size_t i = 0; i < x.rows; ++i) {
    for (std::size_t j = 0; j < x.cols; ++j)
      r(i, j) = x(i, j);
    for (std::size_t j = 0; j < y.cols; ++j)
      r(i, x.cols + j) = y(i, j);
  }
  return r;
}

template <class F> FMat<F> vstack(const F &f, const FMat<F> &x, const FMat<F> &y) {
  if (x.cols != y.cols)
    throw std::invalid_argument("vstack: column mismatch");
  FMat<F> r = zeros(f, x.rows + y.rows, x.cols);
  std::copy(x.a.begin(), x.a.end(), r.a.begin());
  std::copy(y.a.begin(), y.a.end(), r.a.begin() + static_cast<std::ptrdiff_t>(x.a.size()));
  return r;
}

} // namespace qh
