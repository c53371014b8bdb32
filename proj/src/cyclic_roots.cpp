#include <algorithm>
#include <set>
#include <stdexcept>

#include "qh/lattice.hpp"
#include "qh/roots.hpp"

namespace qh {

std::vector<std::size_t> CyclicRootTable::lengths() const {
  std::vector<std::size_t> n;
  for (const auto &o : orbits)
    n.push_back(o.size());
  return n;
}

Json CyclicRootTable::to_json(const Quiver &q) const {
  Json j;
  j["delta"] = delta;
  j["extending_vertex"] = p;
  j["extending_vertex_is_sink"] = p_sink;
  j["alpha0"] = alpha0;
  j["L"] = L();
  j["N"] = lengths();
  Json orbs = Json::array();
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    Json o;
    o["i"] = i + 1;
    o["roots"] = orbits[i];
    o["n_i"] = n_index[i];
    Json defects = Json::array();
    for (const auto &a : orbits[i])
      defects.push_back(euler_form(q, delta, a));
    o["defects"] = defects;
    orbs.push_back(o);
  }
  j["orbits"] = orbs;
  return j;
}

CyclicRootTable cyclic_roots(const Quiver &q) {
  DynkinClass c = classify(q);
  if (!c.affine())
    throw std::invalid_argument("cyclic roots require an affine quiver");
  if (c.cyclic)
    throw std::invalid_argument("cyclic orientation has no Coxeter element");
  if (c.kronecker)
    throw std::invalid_argument("cyclic roots are not defined for the Kronecker quiver");
  CyclicRootTable t;
  t.delta = first_imaginary_root(q);
  std::vector<DimVector> regular;
  for (const auto &r : roots_up_to(q, 1))
    if (r.real() && r.defect == 0)
      regular.push_back(r.vector);
  std::set<DimVector> regular_set(regular.begin(), regular.end());

  auto decomposable = [&](const DimVector &a) {
    for (const auto &b : regular)
      if (dominated(b, a) && b != a && regular_set.count(sub(a, b)))
        return true;
    return false;
  };

  std::set<DimVector> seen;
  for (const auto &a : regular) {
    if (seen.count(a))
      continue;
    std::vector<DimVector> orbit{a};
    DimVector cur = coxeter_transform(q, a);
    while (cur != a) {
      if (!regular_set.count(cur))
        throw std::logic_error("Coxeter orbit of a regular root left the box below delta");
      orbit.push_back(cur);
      cur = coxeter_transform(q, cur);
    }
    for (const auto &x : orbit)
      seen.insert(x);
    std::size_t low = 0;
    for (const auto &x : orbit)
      low += !decomposable(x);
    if (low != 0 && low != orbit.size())
      throw std::logic_error("lowest-orbit test depends on the orbit member");
    if (low == 0)
      continue;
    auto base = std::min_element(orbit.begin(), orbit.end());
    std::rotate(orbit.begin(), base, orbit.end());
    t.orbits.push_back(orbit);
  }
  std::sort(t.orbits.begin(), t.orbits.end(),
            [](const auto &x, const auto &y) { return x[0] < y[0]; });

  auto ext = extending_vertices(q);
  std::sort(ext.begin(), ext.end());
  for (const auto &v : ext)
    if (is_sink(q, q.index(v))) {
      t.p = v;
      t.p_sink = true;
      break;
    }
  if (!t.p_sink)
    t.p = ext.front();
  std::size_t pi = q.index(t.p);
  t.alpha0 = sub(t.delta, q.simple(pi));
  for (const auto &o : t.orbits) {
    std::size_t n = o.size();
    for (std::size_t j = 0; j < o.size(); ++j)
      if (o[j][pi] == 1)
        n = j;
    t.n_index.push_back(n);
  }
  return t;
}

namespace {

std::vector<Integer> to_int(const DimVector &v) {
  std::vector<Integer> r;
  for (auto x : v)
    r.emplace_back(static_cast<long>(x));
  return r;
}

bool all_ones(const SmithForm &s) {
  return std::all_of(s.diagonal.begin(), s.diagonal.end(), [](const Integer &d) { return d == 1; });
}

} // namespace

CheckReport verify_lattice_presentation(const Quiver &q, const CyclicRootTable &t) {
  CheckReport r;
  IntMatrix gens;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < t.orbits.size(); ++i)
    for (std::size_t j = 0; j < t.orbits[i].size(); ++j) {
      gens.push_back(to_int(t.orbits[i][j]));
      names.push_back("alpha_" + std::to_string(i + 1) + "," + std::to_string(j));
    }
  gens.push_back(to_int(t.alpha0));
  names.push_back("alpha_0");
  gens.push_back(to_int(t.delta));
  names.push_back("delta");
  std::size_t g = gens.size(), n = q.size();

  SmithForm sg = smith_normal_form(gens);
  r.add("generators have rank |I|", sg.rank == n,
        "rank " + std::to_string(sg.rank) + " vs " + std::to_string(n));
  r.add("generators span Z[I] (unit invariant factors)", all_ones(sg));

  // Relation vectors: sum_j alpha_{i,j} - delta.
  IntMatrix rel;
  std::size_t offset = 0;
  for (const auto &o : t.orbits) {
    std::vector<Integer> row(g, 0);
    for (std::size_t j = 0; j < o.size(); ++j)
      row[offset + j] = 1;
    row[g - 1] = -1;
    offset += o.size();
    rel.push_back(row);
  }
  bool in_kernel = true;
  for (const auto &row : rel)
    for (std::size_t k = 0; k < n; ++k) {
      Integer s = 0;
      for (std::size_t a = 0; a < g; ++a)
        s += row[a] * gens[a][k];
      if (s != 0)
        in_kernel = false;
    }
  r.add("relations hold", in_kernel);
  SmithForm sr = rel.empty() ? SmithForm{} : smith_normal_form(rel);
  r.add("relations have full kernel rank", sr.rank == g - n,
        "rank " + std::to_string(sr.rank) + " vs " + std::to_string(g - n));
  r.add("relations generate the relation module", all_ones(sr));

  std::size_t sum = 0;
  for (auto len : t.lengths())
    sum += len - 1;
  r.add("sum of (N_i - 1) equals |I| - 2", sum + 2 == n);
  for (std::size_t i = 0; i < t.orbits.size(); ++i) {
    DimVector s = q.zero();
    for (const auto &a : t.orbits[i])
      s = add(s, a);
    r.add("orbit " + std::to_string(i + 1) + " sums to delta", s == t.delta);
    for (std::size_t j = 0; j < t.orbits[i].size(); ++j) {
      const auto &a = t.orbits[i][j];
      const auto &next = t.orbits[i][(j + 1) % t.orbits[i].size()];
      r.add("c(alpha_" + std::to_string(i + 1) + "," + std::to_string(j) + ") is the next root",
            coxeter_transform(q, a) == next);
      r.add("alpha_" + std::to_string(i + 1) + "," + std::to_string(j) + " is regular",
            euler_form(q, t.delta, a) == 0);
    }
  }
  r.add("alpha_0 has nonzero defect", euler_form(q, t.delta, t.alpha0) != 0);

  Json sj;
  sj["generators"] = names;
  sj["generator_count"] = g;
  sj["generator_invariant_factors"] = Json::array();
  for (const auto &d : sg.diagonal)
    sj["generator_invariant_factors"].push_back(d.get_str());
  sj["relation_count"] = rel.size();
  sj["relation_invariant_factors"] = Json::array();
  for (const auto &d : sr.diagonal)
    sj["relation_invariant_factors"].push_back(d.get_str());
  sj["rank"] = sg.rank;
  r.data = sj;
  return r;
}

Quiver star_of_chains(const CyclicRootTable &t) {
  std::vector<std::string> vs;
  std::vector<Edge> es;
  auto name = [](std::size_t i, std::size_t j) {
    return "a" + std::to_string(i + 1) + "_" + std::to_string(j);
  };
  for (std::size_t i = 0; i < t.orbits.size(); ++i) {
    std::size_t N = t.orbits[i].size(), n = t.n_index[i];
    for (std::size_t k = 1; k < N; ++k)
      vs.push_back(name(i, (n + k) % N));
    for (std::size_t k = 2; k < N; ++k)
      es.push_back({name(i, (n + k - 1) % N), name(i, (n + k) % N)});
    if (N > 1)
      es.push_back({name(i, (n + N - 1) % N), "spade"});
  }
  vs.push_back("spade");
  return Quiver(vs, es);
}

CheckReport nu_isometry_check(const Quiver &q, const CyclicRootTable &t) {
  CheckReport r;
  if (!t.p_sink)
    throw std::invalid_argument("hypothesis failed: delta - alpha_0 must be an extending sink; "
                                "vertex " + t.p + " is not a sink");
  for (std::size_t i = 0; i < t.orbits.size(); ++i)
    if (t.n_index[i] >= t.orbits[i].size())
      throw std::invalid_argument("hypothesis failed: orbit " + std::to_string(i + 1) +
                                  " has no member supported at the extending vertex");
  std::size_t pi = q.index(t.p);
  std::vector<std::string> vs;
  std::vector<Edge> es;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (i != pi)
      vs.push_back(q.vertices()[i]);
  for (const auto &e : q.edges())
    if (e.out != t.p && e.in != t.p)
      es.push_back(e);
  Quiver qp(vs, es);
  Quiver qh = star_of_chains(t);

  auto restrict = [&](const DimVector &v) {
    DimVector o;
    for (std::size_t i = 0; i < q.size(); ++i)
      if (i != pi)
        o.push_back(v[i]);
    return o;
  };
  // nu on the basis of Z[I-hat], in the vertex order of qh
  std::vector<DimVector> image;
  for (const auto &v : qh.vertices()) {
    if (v == "spade") {
      image.push_back(restrict(scale(-1, t.alpha0)));
      continue;
    }
    auto us = v.find('_');
    std::size_t i = std::stoul(v.substr(1, us - 1)) - 1, j = std::stoul(v.substr(us + 1));
    if (t.orbits[i][j][pi] != 0)
      throw std::logic_error("chain root supported at the extending vertex");
    image.push_back(restrict(t.orbits[i][j]));
  }
  IntMatrix m;
  for (const auto &v : image)
    m.push_back(to_int(v));
  SmithForm s = smith_normal_form(m);
  r.add("nu is a lattice isomorphism", image.size() == qp.size() && s.rank == qp.size() && all_ones(s));

  std::size_t pairs = 0, bad = 0;
  for (std::size_t a = 0; a < qh.size(); ++a)
    for (std::size_t b = 0; b < qh.size(); ++b) {
      ++pairs;
      if (euler_form(qp, image[a], image[b]) != euler_form(qh, qh.simple(a), qh.simple(b)))
        ++bad;
    }
  r.add("Euler forms agree on all generator pairs", bad == 0,
        std::to_string(bad) + " of " + std::to_string(pairs) + " pairs differ");

  // EPAlpha relations in Q
  DimVector pv = q.simple(pi), minus_a0 = scale(-1, t.alpha0);
  for (std::size_t i = 0; i < t.orbits.size(); ++i) {
    std::size_t N = t.orbits[i].size(), n = t.n_index[i], m_i = (n + N - 1) % N;
    const auto &am = t.orbits[i][m_i];
    std::string tag = "orbit " + std::to_string(i + 1);
    r.add(tag + ": e(-alpha_0, alpha_m) = 0",
          euler_form(q, minus_a0, am) == 0 && euler_form(q, pv, am) == 0);
    r.add(tag + ": e(alpha_m, -alpha_0) = -1",
          euler_form(q, am, minus_a0) == -1 && euler_form(q, am, pv) == -1);
    for (std::size_t j = 0; j < N; ++j) {
      if (j == n || j == m_i)
        continue;
      const auto &aj = t.orbits[i][j];
      r.add(tag + ": e(-alpha_0, alpha_" + std::to_string(j) + ") = 0",
            euler_form(q, minus_a0, aj) == 0);
      r.add(tag + ": e(alpha_" + std::to_string(j) + ", -alpha_0) = 0",
            euler_form(q, aj, minus_a0) == 0);
    }
  }
  DynkinClass ch = classify(qh), cp = classify(qp);
  r.add("Dynkin graphs of Q-hat and Q' coincide", ch.describe() == cp.describe(),
        ch.describe() + " vs " + cp.describe());
  r.data["q_hat"] = Json::parse(quiver_to_json(qh));
  r.data["q_hat_class"] = ch.describe();
  r.data["q_prime_class"] = cp.describe();
  r.data["pairs_checked"] = pairs;
  return r;
}

} // namespace qh
