#include "qh/lie_epsilon.hpp"

#include <algorithm>

#include "qh/lattice.hpp"

namespace qh {

namespace {

Rational rat(long long v) { return Rational(static_cast<long>(v)); }

bool simply_laced(const Quiver &q) {
  std::map<std::pair<std::size_t, std::size_t>, int> m;
  for (std::size_t h = 0; h < q.edge_count(); ++h) {
    std::size_t a = q.out(h), b = q.in(h);
    if (++m[{std::min(a, b), std::max(a, b)}] > 1)
      return false;
  }
  return true;
}

} // namespace

EpsAlgebra::EpsAlgebra(const Quiver &q, Cocycle variant, int cap) : q_(q), variant_(variant), cap_(cap) {
  DynkinClass c = classify(q);
  if (c.finite()) {
    for (const auto &r : positive_roots(q))
      grades_.push_back(r.vector);
  } else if (c.affine() || c.kind == DynkinKind::Jordan) {
    if (cap < 1)
      throw std::invalid_argument("affine algebras need a cap of at least 1");
    affine_ = true;
    delta_ = first_imaginary_root(q);
    auto ext = extending_vertices(q);
    std::sort(ext.begin(), ext.end());
    pin_ = q.index(ext.front());
    for (const auto &r : roots_up_to(q, cap + 1)) {
      if (r.real() || imaginary_degree(r.vector) <= cap)
        grades_.push_back(r.vector);
    }
  } else {
    throw std::invalid_argument("n^epsilon needs a finite or affine quiver; got " + c.describe());
  }
  for (std::size_t k = 0; k < grades_.size(); ++k)
    index_[grades_[k]] = k;
}

long long EpsAlgebra::imaginary_degree(const DimVector &g) const {
  if (!affine_ || g.empty() || g[0] % delta_[0] != 0)
    return 0;
  long long n = g[0] / delta_[0];
  return (n > 0 && scale(n, delta_) == g) ? n : 0;
}

bool EpsAlgebra::imaginary(const DimVector &g) const { return imaginary_degree(g) > 0; }

bool EpsAlgebra::is_root(const DimVector &g) const {
  if (!is_nonnegative(g) || height(g) == 0)
    return false;
  if (imaginary(g))
    return true;
  return cartan_pairing(q_, g, g) == 2;
}

std::size_t EpsAlgebra::dim(const DimVector &g) const {
  if (!is_root(g))
    return 0;
  return imaginary(g) ? q_.size() - 1 : 1;
}

std::size_t EpsAlgebra::total_dim() const {
  std::size_t n = 0;
  for (const auto &g : grades_)
    n += dim(g);
  return n;
}

int EpsAlgebra::xi(const DimVector &a) const {
  if (!affine_ || !is_root(a))
    return 1;
  if (long long n = imaginary_degree(a))
    return n % 2 == 1 ? 1 : -1;
  if (euler_form(q_, delta_, a) != 0)
    return 1;
  return delta_multiple(a, delta_) % 2 == 0 ? 1 : -1;
}

int EpsAlgebra::eps(const DimVector &a, const DimVector &b) const {
  int e = euler_cocycle(q_, a, b);
  if (variant_ == Cocycle::Twisted)
    e *= xi(qh::add(a, b)) * xi(a) * xi(b);
  return e;
}

LieElement EpsAlgebra::zero(const DimVector &g) const {
  return LieElement{g, std::vector<Rational>(dim(g))};
}

LieElement EpsAlgebra::basis(const DimVector &g, std::size_t k) const {
  LieElement x = zero(g);
  x.c.at(k) = 1;
  return x;
}

LieElement EpsAlgebra::simple(std::size_t i) const { return basis(q_.simple(i), 0); }

LieElement EpsAlgebra::imaginary_class(const std::vector<Rational> &h, long long n) const {
  LieElement x = zero(scale(n, delta_));
  Rational t = h[pin_] / rat(delta_[pin_]);
  std::size_t k = 0;
  for (std::size_t i = 0; i < q_.size(); ++i) {
    if (i == pin_)
      continue;
    x.c[k++] = h[i] - t * rat(delta_[i]);
  }
  return x;
}

std::vector<Rational> EpsAlgebra::lift(const LieElement &x) const {
  std::vector<Rational> h(q_.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < q_.size(); ++i)
    if (i != pin_)
      h[i] = x.c[k++];
  return h;
}

LieElement EpsAlgebra::add(const LieElement &x, const LieElement &y) const {
  if (x.grade != y.grade)
    throw std::invalid_argument("adding elements of different grades");
  LieElement r = x;
  for (std::size_t k = 0; k < r.c.size(); ++k)
    r.c[k] += y.c[k];
  return r;
}

LieElement EpsAlgebra::scaled(const Rational &k, const LieElement &x) const {
  LieElement r = x;
  for (auto &v : r.c)
    v *= k;
  return r;
}

LieElement EpsAlgebra::bracket_basis(const DimVector &a, std::size_t ka, const DimVector &b,
                                     std::size_t kb) const {
  DimVector s = qh::add(a, b);
  LieElement out = zero(s);
  if (!is_root(s))
    return out;
  bool ia = imaginary(a), ib = imaginary(b);
  if (ia && ib)
    return out;
  if (!has_grade(s))
    throw CapOverflow("bracket lands in grade " + vec_str(s) + " beyond the cap");
  if (!ia && !ib) {
    if (long long k = imaginary_degree(s)) {
      std::vector<Rational> h;
      for (auto v : a)
        h.push_back(rat(v));
      LieElement cls = imaginary_class(h, k);
      return scaled(eps(a, b), cls);
    }
    out.c[0] = eps(a, b);
    return out;
  }
  // [h(n), e_b] with the imaginary factor first
  const DimVector &hg = ia ? a : b;
  const DimVector &rg = ia ? b : a;
  std::vector<Rational> h = lift(basis(hg, ia ? ka : kb));
  Rational pair = 0;
  for (std::size_t i = 0; i < q_.size(); ++i)
    pair += h[i] * rat(cartan_pairing(q_, q_.simple(i), rg));
  out.c[0] = pair * eps(hg, rg);
  if (!ia)
    out.c[0] = -out.c[0];
  return out;
}

LieElement EpsAlgebra::bracket(const LieElement &x, const LieElement &y) const {
  DimVector s = qh::add(x.grade, y.grade);
  LieElement out = zero(s);
  for (std::size_t i = 0; i < x.c.size(); ++i) {
    if (x.c[i] == 0)
      continue;
    for (std::size_t j = 0; j < y.c.size(); ++j) {
      if (y.c[j] == 0)
        continue;
      LieElement t = bracket_basis(x.grade, i, y.grade, j);
      for (std::size_t k = 0; k < out.c.size(); ++k)
        out.c[k] += x.c[i] * y.c[j] * t.c[k];
    }
  }
  return out;
}

std::string EpsAlgebra::symbol(const DimVector &g, std::size_t k) const {
  if (long long n = imaginary_degree(g)) {
    std::size_t idx = 0, seen = 0;
    for (std::size_t i = 0; i < q_.size(); ++i) {
      if (i == pin_)
        continue;
      if (seen++ == k)
        idx = i;
    }
    return "h_" + q_.vertices()[idx] + "(" + std::to_string(n) + ")";
  }
  return "e" + vec_str(g);
}

std::string EpsAlgebra::describe(const LieElement &x) const {
  std::string s;
  for (std::size_t k = 0; k < x.c.size(); ++k) {
    if (x.c[k] == 0)
      continue;
    if (!s.empty())
      s += " + ";
    s += x.c[k].get_str() + "*" + symbol(x.grade, k);
  }
  return s.empty() ? "0" : s;
}

namespace {

struct BasisRef {
  DimVector grade;
  std::size_t k;
};

std::vector<BasisRef> all_basis(const EpsAlgebra &g) {
  std::vector<BasisRef> out;
  for (const auto &gr : g.grades())
    for (std::size_t k = 0; k < g.dim(gr); ++k)
      out.push_back({gr, k});
  return out;
}

} // namespace

CheckReport verify_serre(const EpsAlgebra &g) {
  CheckReport r;
  const Quiver &q = g.quiver();
  Json pairs = Json::array();
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (i == j)
        continue;
      long long power = 1 - cartan_pairing(q, q.simple(i), q.simple(j));
      std::string name = "(ad e_" + q.vertices()[i] + ")^" + std::to_string(power) + " e_" +
                         q.vertices()[j] + " = 0";
      try {
        LieElement x = g.simple(j);
        for (long long t = 0; t < power; ++t)
          x = g.bracket(g.simple(i), x);
        r.add(name, x.is_zero(), g.describe(x));
        pairs.push_back({{"i", q.vertices()[i]}, {"j", q.vertices()[j]}, {"power", power},
                         {"zero", x.is_zero()}});
      } catch (const CapOverflow &e) {
        r.add(name, false, e.what());
      }
    }
  r.data["pairs"] = pairs;
  return r;
}

CheckReport verify_jacobi(const EpsAlgebra &g) {
  CheckReport r;
  auto b = all_basis(g);
  std::size_t triples = 0, skipped = 0, bad = 0, skew_bad = 0, pairs = 0;
  std::string first_bad;
  for (std::size_t x = 0; x < b.size(); ++x)
    for (std::size_t y = x; y < b.size(); ++y) {
      try {
        auto X = g.basis(b[x].grade, b[x].k), Y = g.basis(b[y].grade, b[y].k);
        ++pairs;
        auto s = g.add(g.bracket(X, Y), g.bracket(Y, X));
        if (!s.is_zero())
          ++skew_bad;
      } catch (const CapOverflow &) {
      }
    }
  for (std::size_t x = 0; x < b.size(); ++x)
    for (std::size_t y = x + 1; y < b.size(); ++y)
      for (std::size_t z = y + 1; z < b.size(); ++z) {
        auto X = g.basis(b[x].grade, b[x].k), Y = g.basis(b[y].grade, b[y].k),
             Z = g.basis(b[z].grade, b[z].k);
        try {
          auto t1 = g.bracket(X, g.bracket(Y, Z));
          auto t2 = g.bracket(Y, g.bracket(Z, X));
          auto t3 = g.bracket(Z, g.bracket(X, Y));
          ++triples;
          auto s = g.add(g.add(t1, t2), t3);
          if (!s.is_zero()) {
            if (bad++ == 0)
              first_bad = g.symbol(X.grade, b[x].k) + "," + g.symbol(Y.grade, b[y].k) + "," +
                          g.symbol(Z.grade, b[z].k);
          }
        } catch (const CapOverflow &) {
          ++skipped;
        }
      }
  r.add("skew-symmetry on all basis pairs", skew_bad == 0, std::to_string(skew_bad) + " failures");
  r.add("Jacobi identity on all in-cap basis triples", bad == 0,
        std::to_string(bad) + " failures, first " + first_bad);
  r.data["basis_size"] = b.size();
  r.data["pairs"] = pairs;
  r.data["triples_checked"] = triples;
  r.data["triples_beyond_cap"] = skipped;
  return r;
}

CheckReport twist_compare(const EpsAlgebra &e, const EpsAlgebra &t) {
  CheckReport r;
  if (!(e.quiver() == t.quiver()) || e.cap() != t.cap() || e.variant() != Cocycle::Euler ||
      t.variant() != Cocycle::Twisted)
    throw std::invalid_argument("twist_compare needs Euler and twisted algebras on the same data");
  auto b = all_basis(e);
  std::size_t cocycle_bad = 0, map_bad = 0, pairs = 0;
  for (const auto &x : b)
    for (const auto &y : b) {
      DimVector s = add(x.grade, y.grade);
      int expect = e.eps(x.grade, y.grade) * e.xi(s) * e.xi(x.grade) * e.xi(y.grade);
      if (t.eps(x.grade, y.grade) != expect)
        ++cocycle_bad;
      try {
        auto X = e.basis(x.grade, x.k), Y = e.basis(y.grade, y.k);
        LieElement lhs = e.bracket(X, Y);
        lhs = e.scaled(e.xi(lhs.grade), lhs);
        LieElement rhs = t.bracket(t.scaled(e.xi(x.grade), X), t.scaled(e.xi(y.grade), Y));
        ++pairs;
        if (!(lhs == rhs))
          ++map_bad;
      } catch (const CapOverflow &) {
      }
    }
  r.add("epsilon' is the xi-coboundary twist of epsilon", cocycle_bad == 0);
  r.add("e_a -> xi(a) f_a intertwines the brackets", map_bad == 0,
        std::to_string(map_bad) + " pairs differ");
  Json xs = Json::array();
  for (const auto &g : e.grades())
    xs.push_back({{"grade", g}, {"xi", e.xi(g)}});
  r.data["xi"] = xs;
  r.data["pairs"] = pairs;
  return r;
}

CheckReport integral_form_check(const EpsAlgebra &g) {
  CheckReport r;
  const Quiver &q = g.quiver();
  std::map<DimVector, IntMatrix> lat;
  bool integral = true;
  Json grades = Json::array();
  bool claimed = g.affine() && simply_laced(q) && !classify(q).cyclic;
  for (const auto &gr : g.grades()) {
    IntMatrix gens;
    if (height(gr) == 1) {
      gens.push_back({Integer(1)});
    } else {
      for (std::size_t i = 0; i < q.size(); ++i) {
        DimVector rest = sub(gr, q.simple(i));
        auto it = lat.find(rest);
        if (it == lat.end())
          continue;
        for (const auto &v : it->second) {
          LieElement y = g.zero(rest);
          for (std::size_t k = 0; k < v.size(); ++k)
            y.c[k] = Rational(v[k]);
          LieElement z = g.bracket(g.simple(i), y);
          std::vector<Integer> row;
          for (const auto &c : z.c) {
            if (c.get_den() != 1)
              integral = false;
            row.push_back(c.get_num());
          }
          gens.push_back(row);
        }
      }
    }
    IntMatrix h = hermite_basis(gens);
    IntMatrix full;
    for (std::size_t k = 0; k < g.dim(gr); ++k) {
      std::vector<Integer> e(g.dim(gr), 0);
      e[k] = 1;
      full.push_back(e);
    }
    Integer index = lattice_index(h, full);
    lat[gr] = h;
    grades.push_back({{"grade", gr}, {"rank", h.size()}, {"index", index.get_str()}});
    if (claimed)
      r.add("Z-closure equals the canonical lattice at " + vec_str(gr), index == 1,
            "index " + index.get_str());
  }
  r.add("all closure coordinates are integers", integral);
  r.data["generation_claimed"] = claimed;
  r.data["grades"] = grades;
  return r;
}

Json structure_table(const EpsAlgebra &g) {
  Json rows = Json::array();
  auto b = all_basis(g);
  for (std::size_t x = 0; x < b.size(); ++x)
    for (std::size_t y = x + 1; y < b.size(); ++y) {
      LieElement z;
      try {
        z = g.bracket(g.basis(b[x].grade, b[x].k), g.basis(b[y].grade, b[y].k));
      } catch (const CapOverflow &) {
        continue;
      }
      if (z.is_zero())
        continue;
      Json terms = Json::object();
      for (std::size_t k = 0; k < z.c.size(); ++k)
        if (z.c[k] != 0)
          terms[g.symbol(z.grade, k)] = z.c[k].get_str();
      rows.push_back({{"x", g.symbol(b[x].grade, b[x].k)},
                      {"y", g.symbol(b[y].grade, b[y].k)},
                      {"bracket", terms}});
    }
  Json basis = Json::array();
  for (const auto &e : b)
    basis.push_back(g.symbol(e.grade, e.k));
  Json j;
  j["basis"] = basis;
  j["cocycle"] = g.variant() == Cocycle::Euler ? "euler" : "twisted";
  j["cap"] = g.affine() ? Json(g.cap()) : Json(nullptr);
  j["nonzero_brackets"] = rows;
  return j;
}

DimVector cyclic_root(std::size_t N, long long i, long long l) {
  DimVector a(N, 0);
  for (long long m = i; m < i + l; ++m)
    ++a[static_cast<std::size_t>(((m % static_cast<long long>(N)) + N) % N)];
  return a;
}

CheckReport cyclic_rebasing_check(const EpsAlgebra &g) {
  CheckReport r;
  const Quiver &q = g.quiver();
  std::size_t N = classify(q).cyclic;
  if (!N || N < 2)
    throw std::invalid_argument("rebasing check needs a cyclic quiver C_N with N >= 2");
  for (std::size_t i = 0; i < N; ++i)
    if (q.vertices()[i] != std::to_string(i) || q.index(q.edges()[i].out) != i ||
        q.index(q.edges()[i].in) != (i + 1) % N)
      throw std::invalid_argument("rebasing check expects vertices 0..N-1 and edges i -> i+1");
  long long n_ = static_cast<long long>(N);
  auto mod = [&](long long v) { return ((v % n_) + n_) % n_; };
  auto sgn = [&](long long l) { return (l / n_) % 2 == 0 ? 1 : -1; };
  struct R {
    long long i, l;
  };
  std::vector<R> reals;
  for (long long i = 0; i < n_; ++i)
    for (long long l = 1; l < (g.cap() + 1) * n_; ++l)
      if (l % n_ != 0)
        reals.push_back({i, l});
  auto ftilde = [&](long long i, long long l) {
    return g.scaled(sgn(l), g.basis(cyclic_root(N, i, l), 0));
  };
  auto htilde = [&](long long i, long long j, long long n) {
    std::vector<Rational> h(N);
    for (long long m = i; mod(m) != mod(j); ++m)
      h[mod(m)] += 1;
    return g.scaled(n % 2 == 0 ? 1 : -1, g.imaginary_class(h, n));
  };
  std::size_t checked = 0, bad = 0;
  std::string first;
  for (const auto &a : reals)
    for (const auto &b : reals) {
      long long kl = a.l + b.l;
      if (kl > g.cap() * n_ + (n_ - 1) || kl / n_ > g.cap())
        continue;
      LieElement got = g.bracket(ftilde(a.i, a.l), ftilde(b.i, b.l));
      LieElement want = g.zero(got.grade);
      bool ij = mod(a.i + a.l) == mod(b.i), ji = mod(b.i + b.l) == mod(a.i);
      if (ij && kl % n_ != 0)
        want = g.scaled(-1, ftilde(a.i, kl));
      else if (ji && kl % n_ != 0)
        want = ftilde(b.i, kl);
      else if (ij && kl % n_ == 0)
        want = htilde(a.i, b.i, kl / n_);
      ++checked;
      if (!(got == want) && bad++ == 0)
        first = "[f(" + std::to_string(a.i) + "," + std::to_string(a.l) + "), f(" +
                std::to_string(b.i) + "," + std::to_string(b.l) + ")]";
    }
  for (long long n = 1; n <= g.cap(); ++n)
    for (std::size_t k = 0; k + 1 < N; ++k) {
      LieElement ht = g.scaled(n % 2 == 0 ? 1 : -1, g.basis(scale(n, g.delta()), k));
      std::vector<Rational> h = g.lift(g.basis(scale(n, g.delta()), k));
      for (const auto &a : reals) {
        if ((a.l + n * n_) / n_ > g.cap())
          continue;
        LieElement got = g.bracket(ht, ftilde(a.i, a.l));
        Rational pair = 0;
        DimVector al = cyclic_root(N, a.i, a.l);
        for (std::size_t v = 0; v < N; ++v)
          pair += h[v] * Rational(static_cast<long>(cartan_pairing(q, q.simple(v), al)));
        LieElement want = g.scaled(pair, ftilde(a.i, a.l + n * n_));
        ++checked;
        if (!(got == want) && bad++ == 0)
          first = "[h~(" + std::to_string(n) + "), f(" + std::to_string(a.i) + "," +
                  std::to_string(a.l) + ")]";
      }
    }
  r.add("rebased brackets match the cyclic formulas", bad == 0,
        std::to_string(bad) + " mismatches, first " + first);
  r.data["brackets_checked"] = checked;
  return r;
}

CheckReport eta_check(const EpsAlgebra &c2, const EpsAlgebra &k) {
  CheckReport r;
  if (classify(c2.quiver()).cyclic != 2 || !classify(k.quiver()).kronecker)
    throw std::invalid_argument("eta_check needs C_2 and the Kronecker quiver");
  if (c2.cap() != k.cap())
    throw std::invalid_argument("eta_check needs equal caps");
  // C_2 grade (a0,a1) goes to K grade (a0,a1); the sign depends on the parity of n
  auto eta = [&](const LieElement &x) {
    LieElement y = k.zero(x.grade);
    if (x.c.empty() || c2.imaginary(x.grade)) {
      y.c = x.c;
      return y;
    }
    long long a0 = x.grade[0], a1 = x.grade[1];
    if (a0 > a1) // alpha_{0,2n+1} with n = a1
      y.c[0] = (a1 % 2 == 0 ? 1 : -1) * x.c[0];
    else // alpha_{1,2n+1} with n = a0
      y.c[0] = (a0 % 2 == 0 ? -1 : 1) * x.c[0];
    return y;
  };
  // sign conventions: f~ = (-1)^n e~ for l = 2n+1, so e~_{0,2n+1} = (-1)^n f~
  std::size_t checked = 0, bad = 0;
  std::vector<std::pair<DimVector, std::size_t>> b;
  for (const auto &g : c2.grades())
    for (std::size_t t = 0; t < c2.dim(g); ++t)
      b.push_back({g, t});
  for (const auto &x : b)
    for (const auto &y : b) {
      try {
        auto X = c2.basis(x.first, x.second), Y = c2.basis(y.first, y.second);
        LieElement lhs = eta(c2.bracket(X, Y));
        LieElement rhs = k.bracket(eta(X), eta(Y));
        ++checked;
        if (!(lhs == rhs))
          ++bad;
      } catch (const CapOverflow &) {
      }
    }
  r.add("eta is a bracket-preserving bijection on in-cap bases", bad == 0,
        std::to_string(bad) + " of " + std::to_string(checked) + " pairs differ");
  r.data["pairs"] = checked;
  return r;
}

} // namespace qh
