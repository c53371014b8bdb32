#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "qh/check.hpp"
#include "qh/matrix.hpp"
#include "qh/quiver.hpp"

namespace qh {

// A representation of a quiver: one space per vertex, one matrix per edge of
// shape dims[in] x dims[out].
template <class F> struct Rep {
  DimVector dims;
  std::vector<FMat<F>> maps;
};

// Field-erased representation used for files and the command line.
struct RepData {
  FieldSpec field;
  DimVector dims;
  std::vector<Matrix<Rational>> maps;
};

RepData parse_rep(const Quiver &q, const Json &j);
Json rep_to_json(const RepData &r);

template <class F> long long total_dim(const Rep<F> &m) {
  long long t = 0;
  for (auto d : m.dims)
    t += d;
  return t;
}

template <class F> Rep<F> zero_rep(const Quiver &q, const F &f, const DimVector &dims) {
  Rep<F> r{dims, {}};
  for (std::size_t h = 0; h < q.edge_count(); ++h)
    r.maps.push_back(zeros(f, dims[q.in(h)], dims[q.out(h)]));
  return r;
}

template <class F> Rep<F> simple_rep(const Quiver &q, const F &f, std::size_t i) {
  return zero_rep(q, f, q.simple(i));
}

template <class F> void check_shapes(const Quiver &q, const Rep<F> &m) {
  if (m.dims.size() != q.size())
    throw std::invalid_argument("representation has " + std::to_string(m.dims.size()) +
                                " spaces for " + std::to_string(q.size()) + " vertices");
  if (m.maps.size() != q.edge_count())
    throw std::invalid_argument("representation has the wrong number of edge maps");
  for (auto d : m.dims)
    if (d < 0)
      throw std::invalid_argument("negative dimension");
  for (std::size_t h = 0; h < q.edge_count(); ++h) {
    const auto &x = m.maps[h];
    if (static_cast<long long>(x.rows) != m.dims[q.in(h)] ||
        static_cast<long long>(x.cols) != m.dims[q.out(h)])
      throw std::invalid_argument("edge " + std::to_string(h) + " map has shape " +
                                  std::to_string(x.rows) + "x" + std::to_string(x.cols));
  }
}

// Every path of length total_dim acts by zero. Tracks the span of images of
// all paths of length k, so sums of paths cannot hide a nonzero composite.
template <class F> bool is_nilpotent(const Quiver &q, const F &f, const Rep<F> &m) {
  std::vector<FMat<F>> span(q.size());
  for (std::size_t v = 0; v < q.size(); ++v)
    span[v] = identity(f, static_cast<std::size_t>(m.dims[v]));
  long long steps = total_dim(m);
  for (long long k = 0; k < steps; ++k) {
    std::vector<FMat<F>> next(q.size());
    for (std::size_t v = 0; v < q.size(); ++v)
      next[v] = zeros(f, static_cast<std::size_t>(m.dims[v]), 0);
    bool any = false;
    for (std::size_t h = 0; h < q.edge_count(); ++h) {
      if (span[q.out(h)].cols == 0)
        continue;
      FMat<F> img = multiply(f, m.maps[h], span[q.out(h)]);
      next[q.in(h)] = column_basis(f, hstack(f, next[q.in(h)], img));
    }
    for (auto &s : next)
      any = any || s.cols > 0;
    if (!any)
      return true;
    span = std::move(next);
  }
  for (const auto &s : span)
    if (s.cols > 0)
      return false;
  return true;
}

template <class F> void validate(const Quiver &q, const F &f, const Rep<F> &m) {
  check_shapes(q, m);
  if (!is_nilpotent(q, f, m))
    throw std::invalid_argument("representation is not nilpotent");
}

// Matrix of rho: (phi_i) -> (phi_in x_h - y_h phi_out)_h. Unknowns are the
// entries of phi_i : M_i -> N_i in vertex order, row-major.
template <class F>
FMat<F> rho_matrix(const Quiver &q, const F &f, const Rep<F> &m, const Rep<F> &n,
                   std::vector<std::size_t> *offsets = nullptr) {
  std::vector<std::size_t> off(q.size() + 1, 0);
  for (std::size_t v = 0; v < q.size(); ++v)
    off[v + 1] = off[v] + static_cast<std::size_t>(m.dims[v] * n.dims[v]);
  std::size_t rows = 0;
  for (std::size_t h = 0; h < q.edge_count(); ++h)
    rows += static_cast<std::size_t>(n.dims[q.in(h)] * m.dims[q.out(h)]);
  FMat<F> r = zeros(f, rows, off[q.size()]);
  std::size_t row = 0;
  for (std::size_t h = 0; h < q.edge_count(); ++h) {
    std::size_t a = q.out(h), b = q.in(h);
    auto ma = static_cast<std::size_t>(m.dims[a]), mb = static_cast<std::size_t>(m.dims[b]);
    auto na = static_cast<std::size_t>(n.dims[a]), nb = static_cast<std::size_t>(n.dims[b]);
    const auto &x = m.maps[h];
    const auto &y = n.maps[h];
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < ma; ++j, ++row) {
        // (phi_b x)_{ij} = sum_k phi_b[i][k] x[k][j]
        for (std::size_t k = 0; k < mb; ++k)
          r(row, off[b] + i * mb + k) = f.add(r(row, off[b] + i * mb + k), x(k, j));
        // (y phi_a)_{ij} = sum_k y[i][k] phi_a[k][j]
        for (std::size_t k = 0; k < na; ++k)
          r(row, off[a] + k * ma + j) = f.sub(r(row, off[a] + k * ma + j), y(i, k));
      }
  }
  if (offsets)
    *offsets = off;
  return r;
}

template <class F> using Morphism = std::vector<FMat<F>>;

template <class F>
std::vector<Morphism<F>> hom_basis(const Quiver &q, const F &f, const Rep<F> &m, const Rep<F> &n) {
  std::vector<std::size_t> off;
  FMat<F> rho = rho_matrix(q, f, m, n, &off);
  FMat<F> ker = nullspace(f, rho);
  std::vector<Morphism<F>> out;
  for (std::size_t c = 0; c < ker.cols; ++c) {
    Morphism<F> phi;
    for (std::size_t v = 0; v < q.size(); ++v) {
      auto rr = static_cast<std::size_t>(n.dims[v]), cc = static_cast<std::size_t>(m.dims[v]);
      FMat<F> p = zeros(f, rr, cc);
      for (std::size_t i = 0; i < rr; ++i)
        for (std::size_t j = 0; j < cc; ++j)
          p(i, j) = ker(off[v] + i * cc + j, c);
      phi.push_back(p);
    }
    out.push_back(phi);
  }
  return out;
}

template <class F> std::size_t hom_dim(const Quiver &q, const F &f, const Rep<F> &m, const Rep<F> &n) {
  FMat<F> rho = rho_matrix(q, f, m, n);
  return rho.cols - rank(f, rho);
}

// Dimension of the cokernel of rho.
template <class F> std::size_t ext1_dim(const Quiver &q, const F &f, const Rep<F> &m, const Rep<F> &n) {
  FMat<F> rho = rho_matrix(q, f, m, n);
  return rho.rows - rank(f, rho);
}

template <class F> Rep<F> direct_sum(const Quiver &q, const F &f, const Rep<F> &m, const Rep<F> &n) {
  Rep<F> r;
  for (std::size_t v = 0; v < q.size(); ++v)
    r.dims.push_back(m.dims[v] + n.dims[v]);
  for (std::size_t h = 0; h < q.edge_count(); ++h) {
    const auto &x = m.maps[h], &y = n.maps[h];
    FMat<F> z = zeros(f, x.rows + y.rows, x.cols + y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
      for (std::size_t j = 0; j < x.cols; ++j)
        z(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.rows; ++i)
      for (std::size_t j = 0; j < y.cols; ++j)
        z(x.rows + i, x.cols + j) = y(i, j);
    r.maps.push_back(z);
  }
  return r;
}

template <class F> bool is_invertible_morphism(const F &f, const Morphism<F> &phi) {
  for (const auto &p : phi)
    if (!is_invertible(f, p))
      return false;
  return true;
}

// Exact test when p is indecomposable: Hom(p, w) is then a free module of rank
// one over the local ring End(p) whose non-isomorphisms form a proper
// subspace, so some basis element is invertible exactly when p and w are isomorphic.
template <class F>
bool isomorphic_to_indecomposable(const Quiver &q, const F &f, const Rep<F> &p, const Rep<F> &w) {
  if (p.dims != w.dims)
    return false;
  for (const auto &phi : hom_basis(q, f, p, w))
    if (is_invertible_morphism(f, phi))
      return true;
  return false;
}

// General test: matching Hom dimensions, then random combinations of a Hom
// basis with a fixed seed. A false answer after all tries is reported as such.
template <class F>
bool isomorphic(const Quiver &q, const F &f, const Rep<F> &m, const Rep<F> &n, int tries = 200) {
  if (m.dims != n.dims)
    return false;
  auto basis = hom_basis(q, f, m, n);
  if (basis.size() != hom_dim(q, f, m, m) || basis.size() != hom_dim(q, f, n, n) ||
      basis.size() != hom_dim(q, f, n, m))
    return false;
  if (basis.empty())
    return total_dim(m) == 0;
  for (const auto &phi : basis)
    if (is_invertible_morphism(f, phi))
      return true;
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long long> coin(-3, 3);
  for (int t = 0; t < tries; ++t) {
    Morphism<F> phi;
    for (std::size_t v = 0; v < q.size(); ++v)
      phi.push_back(zeros(f, static_cast<std::size_t>(n.dims[v]), static_cast<std::size_t>(m.dims[v])));
    for (const auto &b : basis) {
      auto c = f.from_int(coin(rng));
      for (std::size_t v = 0; v < q.size(); ++v)
        for (std::size_t k = 0; k < b[v].a.size(); ++k)
          phi[v].a[k] = f.add(phi[v].a[k], f.mul(c, b[v].a[k]));
    }
    if (is_invertible_morphism(f, phi))
      return true;
  }
  return false;
}

template <class F> Rep<F> from_data(const F &f, const RepData &d) {
  Rep<F> r{d.dims, {}};
  for (const auto &m : d.maps) {
    FMat<F> x = zeros(f, m.rows, m.cols);
    for (std::size_t k = 0; k < m.a.size(); ++k)
      x.a[k] = f.from_rational(m.a[k]);
    r.maps.push_back(x);
  }
  return r;
}

template <class F> RepData to_data(const F &f, const Rep<F> &r) {
  RepData d{f.spec(), r.dims, {}};
  for (const auto &m : r.maps) {
    Matrix<Rational> x(m.rows, m.cols, Rational(0));
    for (std::size_t k = 0; k < m.a.size(); ++k)
      x.a[k] = f.to_rational(m.a[k]);
    d.maps.push_back(x);
  }
  return d;
}

} // namespace qh
