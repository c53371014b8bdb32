#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qh/functors.hpp"
#include "qh/roots.hpp"

namespace qh {

enum class FamilyKind { Finite, Kronecker, Cyclic, Jordan, AffineA, AffineDE };

// Field-free data shared by every catalog of one quiver.
struct Family {
  Quiver q;
  DynkinClass cls;
  FamilyKind kind = FamilyKind::Finite;
  DimVector delta;
  std::size_t src = 0; // Kronecker source vertex

  // Cyclic and affine A: cycle[k] and the edge joining cycle[k] to cycle[k+1].
  std::vector<std::size_t> cycle, cycle_edges;

  // Affine, non-cyclic, non-Kronecker.
  CyclicRootTable table;
  std::size_t p = 0;
  std::vector<std::size_t> p_edges;      // edges into p, in edge order
  std::vector<Point> exc_points;          // one per tube of the table
  std::vector<std::size_t> k_index;       // quasi-top index of K H_{z_i}(J_1)

  bool tubes() const { return kind == FamilyKind::Kronecker || kind == FamilyKind::AffineA || kind == FamilyKind::AffineDE; }
  std::size_t tube_count() const { return table.orbits.size(); }
};

std::shared_ptr<const Family> make_family(const Quiver &q);

enum class LabelKind { Root, KronU, Tube, Exc, CyclicP, Jordan };

struct Label {
  LabelKind kind = LabelKind::Root;
  DimVector dims;
  long long a = 0, b = 0, c = 0; // KronU(a=side, b=n); Exc(a=i, b=j, c=n); P(a=i, b=l); Tube(b=n); J(b=n)
  Point z;

  std::string str() const;
  friend bool operator==(const Label &x, const Label &y) { return x.str() == y.str(); }
};

Label parse_label(const Family &fam, const std::string &s);
// A '+'-separated multiset of labels.
std::vector<Label> parse_labels(const Family &fam, const std::string &s);
std::string labels_str(std::vector<Label> ls);

// Imaginary multiple n with dims = n delta, or 0.
long long imaginary_multiple(const Family &fam, const DimVector &dims);
bool is_root_of(const Family &fam, const DimVector &dims);

// String module on the cycle: basis b_t at cycle[(s+t) % m], t < len.
template <class F> Rep<F> string_rep(const Family &fam, const F &f, std::size_t s, std::size_t len) {
  const Quiver &q = fam.q;
  std::size_t m = fam.cycle.size();
  DimVector dims(q.size(), 0);
  std::vector<std::size_t> local(len);
  for (std::size_t t = 0; t < len; ++t)
    local[t] = static_cast<std::size_t>(dims[fam.cycle[(s + t) % m]]++);
  Rep<F> r = zero_rep(q, f, dims);
  for (std::size_t t = 0; t + 1 < len; ++t) {
    std::size_t h = fam.cycle_edges[(s + t) % m];
    std::size_t u = fam.cycle[(s + t) % m];
    if (q.out(h) == u)
      r.maps[h](local[t + 1], local[t]) = f.one();
    else
      r.maps[h](local[t], local[t + 1]) = f.one();
  }
  return r;
}

// The graded Jordan block P_{i,l}: e_k sits in degree l-k+i and x e_k = e_{k-1}.
template <class F> Rep<F> cyclic_p(const Family &fam, const F &f, std::size_t i, std::size_t l) {
  const Quiver &q = fam.q;
  std::size_t n = fam.cycle.size();
  DimVector dims(q.size(), 0);
  std::vector<std::size_t> deg(l + 1), local(l + 1);
  for (std::size_t k = 1; k <= l; ++k) {
    deg[k] = (l - k + i) % n;
    local[k] = static_cast<std::size_t>(dims[fam.cycle[deg[k]]]++);
  }
  Rep<F> r = zero_rep(q, f, dims);
  for (std::size_t k = 2; k <= l; ++k)
    r.maps[fam.cycle_edges[deg[k]]](local[k - 1], local[k]) = f.one();
  return r;
}

// Fixed indecomposable of dims delta - p supported away from p.
template <class F> Rep<F> k_fixed(const Family &fam, const F &f) {
  const Quiver &q = fam.q;
  DimVector d = sub(fam.delta, q.simple(fam.p));
  if (fam.kind == FamilyKind::AffineA) {
    Rep<F> y = zero_rep(q, f, d);
    for (std::size_t h = 0; h < q.edge_count(); ++h)
      if (q.in(h) != fam.p && q.out(h) != fam.p)
        y.maps[h](0, 0) = f.one();
    return y;
  }
  std::vector<std::string> vs;
  std::vector<Edge> es;
  std::vector<std::size_t> old_vertex, old_edge;
  for (std::size_t v = 0; v < q.size(); ++v)
    if (v != fam.p) {
      vs.push_back(q.vertices()[v]);
      old_vertex.push_back(v);
    }
  for (std::size_t h = 0; h < q.edge_count(); ++h)
    if (q.in(h) != fam.p && q.out(h) != fam.p) {
      es.push_back(q.edges()[h]);
      old_edge.push_back(h);
    }
  Quiver sub_q(vs, es);
  DimVector sd;
  for (auto v : old_vertex)
    sd.push_back(d[v]);
  Rep<F> small = bgp_indecomposable(sub_q, f, sd);
  Rep<F> y = zero_rep(q, f, d);
  for (std::size_t k = 0; k < old_edge.size(); ++k)
    y.maps[old_edge[k]] = small.maps[k];
  return y;
}

// The functor K from Kronecker representations (V_0, V_1, x_a, x_b) to
// representations of the affine quiver, for an extending sink p.
template <class F>
Rep<F> functor_k(const Family &fam, const F &f, const FMat<F> &xa, const FMat<F> &xb) {
  const Quiver &q = fam.q;
  if (!is_sink(q, fam.p))
    throw std::invalid_argument("functor K needs an extending sink");
  Rep<F> y = k_fixed(fam, f);
  std::size_t m = xa.cols;
  Rep<F> w;
  for (std::size_t v = 0; v < q.size(); ++v)
    w.dims.push_back(v == fam.p ? static_cast<long long>(xa.rows) : y.dims[v] * static_cast<long long>(m));
  FMat<F> delta_map = hstack(f, xa, xb);
  std::size_t col = 0;
  for (std::size_t h = 0; h < q.edge_count(); ++h) {
    if (q.in(h) == fam.p) {
      auto width = static_cast<std::size_t>(w.dims[q.out(h)]);
      FMat<F> z = zeros(f, xa.rows, width);
      for (std::size_t r = 0; r < xa.rows; ++r)
        for (std::size_t c = 0; c < width; ++c)
          z(r, c) = delta_map(r, col + c);
      col += width;
      w.maps.push_back(z);
      continue;
    }
    const auto &yh = y.maps[h];
    FMat<F> z = zeros(f, yh.rows * m, yh.cols * m);
    for (std::size_t r = 0; r < yh.rows; ++r)
      for (std::size_t c = 0; c < yh.cols; ++c)
        for (std::size_t k = 0; k < m; ++k)
          z(r * m + k, c * m + k) = yh(r, c);
    w.maps.push_back(z);
  }
  return w;
}

template <class F> Point reduce_point(const F &f, const Point &z) {
  auto a = f.from_rational(z.a), b = f.from_rational(z.b);
  if (f.is_zero(a))
    return Point{0, 1};
  return Point{1, f.to_rational(f.mul(b, f.inv(a)))};
}

// Kronecker shadow of an affine A representation: the maps on the two edges
// into p, with the second transported along the path that avoids p. Empty
// when a path map is not invertible.
template <class F>
std::optional<std::pair<FMat<F>, FMat<F>>> kronecker_shadow(const Family &fam, const F &f, const Rep<F> &w) {
  const Quiver &q = fam.q;
  std::size_t h1 = fam.p_edges[0], h2 = fam.p_edges[1];
  std::size_t q1 = q.out(h1), q2 = q.out(h2);
  std::size_t m = fam.cycle.size();
  std::size_t pos = 0;
  while (fam.cycle[pos] != fam.p)
    ++pos;
  // walk from q1 away from p until q2
  int step = fam.cycle[(pos + 1) % m] == q1 ? 1 : -1;
  std::size_t cur = (pos + static_cast<std::size_t>(step + static_cast<int>(m))) % m;
  FMat<F> transport = identity(f, static_cast<std::size_t>(w.dims[q1]));
  while (fam.cycle[cur] != q2) {
    std::size_t next = (cur + static_cast<std::size_t>(step + static_cast<int>(m))) % m;
    std::size_t h = fam.cycle_edges[step == 1 ? cur : next];
    const auto &x = w.maps[h];
    if (!is_invertible(f, x))
      return std::nullopt;
    transport = multiply(f, q.out(h) == fam.cycle[cur] ? x : inverse(f, x), transport);
    cur = next;
  }
  return std::make_pair(w.maps[h1], multiply(f, w.maps[h2], transport));
}

template <class F> class Catalog {
public:
  Catalog(std::shared_ptr<const Family> fam, F f) : fam_(std::move(fam)), f_(std::move(f)) {
    for (const auto &z : fam_->exc_points) {
      Point r = reduce_point(f_, z);
      for (const auto &o : exc_)
        if (o == r)
          throw std::invalid_argument("exceptional points collide over " + f_.spec().name());
      exc_.push_back(r);
    }
  }

  const Family &family() const { return *fam_; }
  const Quiver &quiver() const { return fam_->q; }
  const F &field() const { return f_; }
  const std::vector<Point> &exceptional_points() const { return exc_; }

  // Tube index of an exceptional point, or -1.
  int exceptional_tube(const Point &z) const {
    for (std::size_t i = 0; i < exc_.size(); ++i)
      if (same_point(f_, exc_[i], z))
        return static_cast<int>(i);
    return -1;
  }

  std::vector<Point> points() const {
    if constexpr (std::is_same_v<F, PrimeField>)
      return projective_line(f_.modulus());
    else
      throw std::invalid_argument("tube points cannot be enumerated over Q");
  }

  Label point_label(const Point &z, long long n) const {
    Label l;
    l.kind = LabelKind::Tube;
    l.b = n;
    l.z = reduce_point(f_, z);
    l.dims = scale(n, fam_->delta);
    return l;
  }

  Rep<F> build(const Label &l) const {
    auto key = l.str();
    auto it = cache_.find(key);
    if (it != cache_.end())
      return it->second;
    Rep<F> r = construct(l);
    cache_.emplace(key, r);
    return r;
  }

  // All indecomposable labels of the given dims.
  std::vector<Label> labels(const DimVector &dims) const {
    const Family &fam = *fam_;
    std::vector<Label> out;
    if (!is_root_of(fam, dims))
      return out;
    long long n = imaginary_multiple(fam, dims);
    auto real = [&](LabelKind k) {
      Label l;
      l.kind = k;
      l.dims = dims;
      return l;
    };
    switch (fam.kind) {
    case FamilyKind::Finite:
      out.push_back(real(LabelKind::Root));
      break;
    case FamilyKind::Jordan: {
      Label l = real(LabelKind::Jordan);
      l.b = dims[0];
      out.push_back(l);
      break;
    }
    case FamilyKind::Kronecker: {
      long long d0 = dims[fam.src], d1 = dims[1 - fam.src];
      if (n > 0) {
        for (const auto &z : points())
          out.push_back(point_label(z, n));
      } else {
        Label l = real(LabelKind::KronU);
        l.a = d0 > d1 ? 0 : 1;
        l.b = std::min(d0, d1);
        out.push_back(l);
      }
      break;
    }
    case FamilyKind::Cyclic: {
      std::size_t nn = fam.cycle.size();
      if (n > 0) {
        for (std::size_t i = 0; i < nn; ++i)
          out.push_back(cyclic_label(i, static_cast<std::size_t>(n) * nn));
      } else {
        out.push_back(cyclic_label(cyclic_start(dims), static_cast<std::size_t>(height(dims))));
      }
      break;
    }
    case FamilyKind::AffineA:
    case FamilyKind::AffineDE:
      if (n == 0) {
        out.push_back(real(LabelKind::Root));
        break;
      }
      for (const auto &z : points())
        if (exceptional_tube(z) < 0)
          out.push_back(point_label(z, n));
      if (fam.kind == FamilyKind::AffineDE && fam.tube_count() > 0)
        throw std::invalid_argument("exceptional tubes of affine D/E quivers are not supported");
      for (std::size_t i = 0; i < fam.tube_count(); ++i)
        for (std::size_t j = 0; j < fam.table.orbits[i].size(); ++j)
          out.push_back(exc_label(i, j, n));
      break;
    }
    return out;
  }

  // Exact identification of an indecomposable; empty when w is decomposable
  // or outside the supported lists.
  std::optional<Label> identify_indecomposable(const Rep<F> &w) const {
    const Family &fam = *fam_;
    const Quiver &q = fam.q;
    if (!is_root_of(fam, w.dims))
      return std::nullopt;
    long long n = imaginary_multiple(fam, w.dims);
    auto certify = [&](const Label &l) -> std::optional<Label> {
      if (isomorphic_to_indecomposable(q, f_, build(l), w))
        return l;
      return std::nullopt;
    };
    if (n == 0 || fam.kind == FamilyKind::Jordan || fam.kind == FamilyKind::Finite) {
      auto ls = labels(w.dims);
      return ls.empty() ? std::nullopt : certify(ls.front());
    }
    if (fam.kind == FamilyKind::Cyclic) {
      for (std::size_t i = 0; i < fam.cycle.size(); ++i)
        if (auto r = certify(cyclic_label(i, static_cast<std::size_t>(n) * fam.cycle.size())))
          return r;
      return std::nullopt;
    }
    if (fam.kind == FamilyKind::Kronecker) {
      auto spec = kronecker_spec(f_, w.maps[0], w.maps[1]);
      if (spec.size() != 1)
        return std::nullopt;
      return certify(point_label(spec[0], n));
    }
    if (fam.kind == FamilyKind::AffineA) {
      if (auto sh = kronecker_shadow(fam, f_, w)) {
        auto spec = kronecker_spec(f_, sh->first, sh->second);
        if (spec.size() == 1 && exceptional_tube(spec[0]) < 0)
          return certify(point_label(spec[0], n));
      }
      for (std::size_t i = 0; i < fam.tube_count(); ++i)
        for (std::size_t j = 0; j < fam.table.orbits[i].size(); ++j)
          if (auto r = certify(exc_label(i, j, n)))
            return r;
      return std::nullopt;
    }
    for (const auto &z : points())
      if (auto r = certify(point_label(z, n)))
        return r;
    return std::nullopt;
  }

  // Start s of the exceptional string of length n m with quasi-top alpha_{i,j}.
  std::size_t exc_string(std::size_t i, std::size_t j, long long n) const {
    auto it = exc_strings_.find(n);
    if (it == exc_strings_.end()) {
      const Family &fam = *fam_;
      std::size_t m = fam.cycle.size();
      std::map<std::pair<std::size_t, std::size_t>, std::size_t> found;
      for (std::size_t s = 0; s < m; ++s) {
        Rep<F> st = string_rep(fam, f_, s, static_cast<std::size_t>(n) * m);
        for (std::size_t ti = 0; ti < fam.tube_count(); ++ti)
          for (std::size_t tj = 0; tj < fam.table.orbits[ti].size(); ++tj)
            if (hom_dim(fam.q, f_, st, quasi_simple(ti, tj)) > 0) {
              if (found.count({ti, tj}))
                throw std::logic_error("two exceptional strings share a quasi-top");
              found[{ti, tj}] = s;
            }
      }
      it = exc_strings_.emplace(n, found).first;
    }
    auto jt = it->second.find({i, j});
    if (jt == it->second.end())
      throw std::logic_error("no exceptional string for tube " + std::to_string(i) + " index " + std::to_string(j));
    return jt->second;
  }

  Rep<F> quasi_simple(std::size_t i, std::size_t j) const {
    Label l;
    l.kind = LabelKind::Root;
    l.dims = fam_->table.orbits[i][j];
    return build(l);
  }

  Label exc_label(std::size_t i, std::size_t j, long long n) const {
    Label l;
    l.kind = LabelKind::Exc;
    l.a = static_cast<long long>(i);
    l.b = static_cast<long long>(j);
    l.c = n;
    l.dims = scale(n, fam_->delta);
    return l;
  }

  Label cyclic_label(std::size_t i, std::size_t l) const {
    Label r;
    r.kind = LabelKind::CyclicP;
    r.a = static_cast<long long>(i);
    r.b = static_cast<long long>(l);
    DimVector d(fam_->q.size(), 0);
    for (std::size_t k = 0; k < l; ++k)
      d[fam_->cycle[(i + k) % fam_->cycle.size()]] += 1;
    r.dims = d;
    return r;
  }

private:
  std::size_t cyclic_start(const DimVector &dims) const {
    auto l = static_cast<std::size_t>(height(dims));
    for (std::size_t i = 0; i < fam_->cycle.size(); ++i)
      if (cyclic_label(i, l).dims == dims)
        return i;
    throw std::invalid_argument(vec_str(dims) + " is not a cyclic root");
  }

  Rep<F> construct(const Label &l) const {
    const Family &fam = *fam_;
    const Quiver &q = fam.q;
    switch (l.kind) {
    case LabelKind::Root:
      if (fam.kind == FamilyKind::Finite || fam.kind == FamilyKind::AffineDE)
        return bgp_indecomposable(q, f_, l.dims);
      if (fam.kind == FamilyKind::AffineA) {
        auto len = static_cast<std::size_t>(height(l.dims));
        for (std::size_t s = 0; s < fam.cycle.size(); ++s) {
          Rep<F> r = string_rep(fam, f_, s, len);
          if (r.dims == l.dims)
            return r;
        }
      }
      break;
    case LabelKind::KronU:
      return kronecker_u(f_, fam.src, static_cast<int>(l.a), static_cast<std::size_t>(l.b));
    case LabelKind::Tube: {
      auto n = static_cast<std::size_t>(l.b);
      if (fam.kind == FamilyKind::Kronecker)
        return kronecker_tube(f_, fam.src, l.z, n);
      if (exceptional_tube(l.z) >= 0)
        throw std::invalid_argument(l.str() + " sits at an exceptional point");
      Rep<F> h = kronecker_tube(f_, 0, l.z, n);
      return functor_k(fam, f_, h.maps[0], h.maps[1]);
    }
    case LabelKind::Exc:
      if (fam.kind == FamilyKind::AffineA)
        return string_rep(fam, f_, exc_string(static_cast<std::size_t>(l.a), static_cast<std::size_t>(l.b), l.c),
                          static_cast<std::size_t>(l.c) * fam.cycle.size());
      break;
    case LabelKind::CyclicP:
      return cyclic_p(fam, f_, static_cast<std::size_t>(l.a), static_cast<std::size_t>(l.b));
    case LabelKind::Jordan: {
      Rep<F> r{DimVector{l.b}, {jordan_block(f_, static_cast<std::size_t>(l.b))}};
      return r;
    }
    }
    throw std::invalid_argument("label " + l.str() + " is not supported for " + fam.cls.type);
  }

  std::shared_ptr<const Family> fam_;
  F f_;
  std::vector<Point> exc_;
  mutable std::map<std::string, Rep<F>> cache_;
  mutable std::map<long long, std::map<std::pair<std::size_t, std::size_t>, std::size_t>> exc_strings_;
};

} // namespace qh
