#pragma once

#include <string>
#include <vector>

#include "qh/rep.hpp"
#include "qh/roots.hpp"

namespace qh {

// A point of the projective line, normalized to (1:t) or (0:1).
struct Point {
  Rational a = 1, b = 0;

  static Point make(const Rational &a, const Rational &b);
  static Point parse(const std::string &s);
  std::string str() const;
  friend bool operator==(const Point &, const Point &) = default;
};

// The points of P^1 over F_p: (1:0), ..., (1:p-1), (0:1).
std::vector<Point> projective_line(std::uint32_t p);

template <class F> bool same_point(const F &f, const Point &x, const Point &y) {
  auto xa = f.from_rational(x.a), xb = f.from_rational(x.b);
  auto ya = f.from_rational(y.a), yb = f.from_rational(y.b);
  return f.equal(f.mul(xa, yb), f.mul(xb, ya));
}

// Nilpotent Jordan block: J e_k = e_{k-1}.
template <class F> FMat<F> jordan_block(const F &f, std::size_t n) {
  FMat<F> j = zeros(f, n, n);
  for (std::size_t k = 1; k < n; ++k)
    j(k - 1, k) = f.one();
  return j;
}

// Kronecker quiver helpers. Edge 0 carries x_a, edge 1 carries x_b; the
// source vertex has index `src`.
template <class F>
Rep<F> kronecker_rep(const F &f, std::size_t src, FMat<F> xa, FMat<F> xb) {
  DimVector dims(2, 0);
  dims[src] = static_cast<long long>(xa.cols);
  dims[1 - src] = static_cast<long long>(xa.rows);
  return Rep<F>{dims, {std::move(xa), std::move(xb)}};
}

// H_z(J_n) with e the normalized vector of z and e' the standard complement.
template <class F> Rep<F> kronecker_tube(const F &f, std::size_t src, const Point &z, std::size_t n) {
  auto a = f.from_rational(z.a), b = f.from_rational(z.b);
  FMat<F> j = jordan_block(f, n), id = identity(f, n);
  if (f.is_zero(a))
    return kronecker_rep(f, src, id, j);
  auto t = f.mul(b, f.inv(a));
  FMat<F> xa = j;
  for (std::size_t k = 0; k < n; ++k)
    xa(k, k) = f.sub(xa(k, k), t);
  return kronecker_rep(f, src, xa, id);
}

// U^0_n of dims (n+1, n) and U^1_n of dims (n, n+1) built from A = [I|0], B = [0|I].
template <class F> Rep<F> kronecker_u(const F &f, std::size_t src, int side, std::size_t n) {
  FMat<F> a = zeros(f, n, n + 1), b = zeros(f, n, n + 1);
  for (std::size_t k = 0; k < n; ++k) {
    a(k, k) = f.one();
    b(k, k + 1) = f.one();
  }
  if (side == 0)
    return kronecker_rep(f, src, a, b);
  return kronecker_rep(f, src, transpose(f, a), transpose(f, b));
}

// Points z where a x_a + b x_b is singular: all of P^1(F_p) is scanned over a
// prime field; over Q the roots of det(x_a + t x_b) are found when it is a
// pure power, which covers every indecomposable tube module.
std::vector<Point> kronecker_spec(const PrimeField &f, const FMat<PrimeField> &xa, const FMat<PrimeField> &xb);
std::vector<Point> kronecker_spec(const RationalField &f, const FMat<RationalField> &xa,
                                  const FMat<RationalField> &xb);

template <class F> typename F::Elem determinant(const F &f, FMat<F> m) {
  auto det = f.one();
  std::size_t n = m.rows;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && f.is_zero(m(p, c)))
      ++p;
    if (p == n)
      return f.zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j)
        std::swap(m(p, j), m(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    auto inv = f.inv(m(c, c));
    for (std::size_t r = c + 1; r < n; ++r) {
      if (f.is_zero(m(r, c)))
        continue;
      auto factor = f.mul(m(r, c), inv);
      for (std::size_t j = c; j < n; ++j)
        m(r, j) = f.sub(m(r, j), f.mul(factor, m(c, j)));
    }
  }
  return det;
}

// BGP reflection functors. At a sink the new space is the kernel of the
// incoming sum map; at a source it is the cokernel of the outgoing map.
// The result lives on reflect_quiver(q, i), whose edge order matches q.
template <class F> Rep<F> reflect_at_sink(const Quiver &q, const F &f, const Rep<F> &m, std::size_t i) {
  if (!is_sink(q, i))
    throw std::invalid_argument("vertex " + q.vertices()[i] + " is not a sink");
  std::vector<std::size_t> in_edges, offset;
  std::size_t total = 0;
  for (std::size_t h = 0; h < q.edge_count(); ++h)
    if (q.in(h) == i) {
      in_edges.push_back(h);
      offset.push_back(total);
      total += static_cast<std::size_t>(m.dims[q.out(h)]);
    }
  FMat<F> sum = zeros(f, static_cast<std::size_t>(m.dims[i]), total);
  for (std::size_t k = 0; k < in_edges.size(); ++k) {
    const auto &x = m.maps[in_edges[k]];
    for (std::size_t r = 0; r < x.rows; ++r)
      for (std::size_t c = 0; c < x.cols; ++c)
        sum(r, offset[k] + c) = x(r, c);
  }
  FMat<F> ker = nullspace(f, sum);
  Rep<F> out = m;
  out.dims[i] = static_cast<long long>(ker.cols);
  for (std::size_t k = 0; k < in_edges.size(); ++k) {
    std::size_t h = in_edges[k];
    auto d = static_cast<std::size_t>(m.dims[q.out(h)]);
    FMat<F> proj = zeros(f, d, ker.cols);
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < ker.cols; ++c)
        proj(r, c) = ker(offset[k] + r, c);
    out.maps[h] = proj;
  }
  return out;
}

template <class F> Rep<F> reflect_at_source(const Quiver &q, const F &f, const Rep<F> &m, std::size_t i) {
  if (!is_source(q, i))
    throw std::invalid_argument("vertex " + q.vertices()[i] + " is not a source");
  std::vector<std::size_t> out_edges, offset;
  std::size_t total = 0;
  for (std::size_t h = 0; h < q.edge_count(); ++h)
    if (q.out(h) == i) {
      out_edges.push_back(h);
      offset.push_back(total);
      total += static_cast<std::size_t>(m.dims[q.in(h)]);
    }
  FMat<F> stack = zeros(f, total, static_cast<std::size_t>(m.dims[i]));
  for (std::size_t k = 0; k < out_edges.size(); ++k) {
    const auto &x = m.maps[out_edges[k]];
    for (std::size_t r = 0; r < x.rows; ++r)
      for (std::size_t c = 0; c < x.cols; ++c)
        stack(offset[k] + r, c) = x(r, c);
  }
  // rows of the cokernel projection span the left kernel of the stacked map
  FMat<F> proj = transpose(f, nullspace(f, transpose(f, stack)));
  Rep<F> out = m;
  out.dims[i] = static_cast<long long>(proj.rows);
  for (std::size_t k = 0; k < out_edges.size(); ++k) {
    std::size_t h = out_edges[k];
    auto d = static_cast<std::size_t>(m.dims[q.in(h)]);
    FMat<F> block = zeros(f, proj.rows, d);
    for (std::size_t r = 0; r < proj.rows; ++r)
      for (std::size_t c = 0; c < d; ++c)
        block(r, c) = proj(r, offset[k] + c);
    out.maps[h] = block;
  }
  return out;
}

template <class F> Rep<F> reflection_apply(const Quiver &q, const F &f, const Rep<F> &m, const std::string &v) {
  std::size_t i = q.index(v);
  if (is_sink(q, i))
    return reflect_at_sink(q, f, m, i);
  if (is_source(q, i))
    return reflect_at_source(q, f, m, i);
  throw std::invalid_argument("vertex " + v + " is neither a sink nor a source");
}

// Indecomposable of a preprojective positive real root built by the BGP
// recipe: reflect at sinks in Coxeter order until the root becomes simple at
// the current sink, then undo the reflections with the source functors.
template <class F> Rep<F> bgp_indecomposable(const Quiver &q, const F &f, const DimVector &alpha, int max_rounds = 64) {
  std::vector<Quiver> quivers{q};
  std::vector<std::size_t> path;
  DimVector beta = alpha;
  for (int round = 0; round < max_rounds; ++round) {
    WeylWord w = coxeter_element(quivers.back());
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      const Quiver &cur = quivers.back();
      std::size_t i = cur.index(*it);
      if (beta == cur.simple(i)) {
        Rep<F> m = simple_rep(cur, f, i);
        for (std::size_t k = path.size(); k-- > 0;)
          m = reflect_at_source(quivers[k + 1], f, m, path[k]);
        return m;
      }
      beta = reflect(cur, *it, beta);
      if (!is_nonnegative(beta))
        throw std::invalid_argument(vec_str(alpha) + " is not reached from a simple at a sink");
      path.push_back(i);
      quivers.push_back(reflect_quiver(cur, *it));
    }
  }
  throw std::invalid_argument(vec_str(alpha) + " is not a preprojective root within the round limit");
}

} // namespace qh
