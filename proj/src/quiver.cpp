#include "qh/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "qh/lattice.hpp"

namespace qh {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (vertices_.empty())
    throw std::invalid_argument("quiver has no vertices");
  std::set<std::string> seen;
  for (const auto &v : vertices_)
    if (!seen.insert(v).second)
      throw std::invalid_argument("duplicate vertex id: " + v);
  for (const auto &e : edges_) {
    tail_.push_back(index(e.out));
    head_.push_back(index(e.in));
  }
}

std::size_t Quiver::index(const std::string &v) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i] == v)
      return i;
  throw std::invalid_argument("unknown vertex: " + v);
}

bool Quiver::has_vertex(const std::string &v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

bool Quiver::has_loop() const {
  for (std::size_t h = 0; h < edges_.size(); ++h)
    if (tail_[h] == head_[h])
      return true;
  return false;
}

DimVector Quiver::simple(std::size_t i) const {
  DimVector v(size(), 0);
  v.at(i) = 1;
  return v;
}

bool operator==(const Quiver &a, const Quiver &b) {
  if (a.vertices_ != b.vertices_ || a.edges_.size() != b.edges_.size())
    return false;
  for (std::size_t h = 0; h < a.edges_.size(); ++h)
    if (a.tail_[h] != b.tail_[h] || a.head_[h] != b.head_[h])
      return false;
  return true;
}

Quiver parse_quiver(const std::string &json_text) {
  nlohmann::json j = nlohmann::json::parse(json_text);
  std::vector<std::string> vs;
  for (const auto &v : j.at("vertices"))
    vs.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  std::vector<Edge> es;
  if (j.contains("edges"))
    for (const auto &e : j.at("edges")) {
      auto id = [](const nlohmann::json &x) {
        return x.is_string() ? x.get<std::string>() : x.dump();
      };
      es.push_back(Edge{id(e.at("out")), id(e.at("in"))});
    }
  return Quiver(vs, es);
}

std::string quiver_to_json(const Quiver &q) {
  nlohmann::ordered_json j;
  j["vertices"] = q.vertices();
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto &e : q.edges())
    j["edges"].push_back({{"out", e.out}, {"in", e.in}});
  return j.dump();
}

namespace {

void check_size(const Quiver &q, const DimVector &a) {
  if (a.size() != q.size())
    throw std::invalid_argument("dimension vector has wrong length");
}

std::vector<std::size_t> components(const Quiver &q) {
  std::vector<std::size_t> comp(q.size());
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](std::size_t x) {
    while (comp[x] != x)
      x = comp[x] = comp[comp[x]];
    return x;
  };
  for (std::size_t h = 0; h < q.edge_count(); ++h)
    comp[find(q.out(h))] = find(q.in(h));
  for (std::size_t i = 0; i < q.size(); ++i)
    comp[i] = find(i);
  return comp;
}

Quiver induced(const Quiver &q, const std::vector<std::size_t> &keep) {
  std::vector<std::string> vs;
  std::set<std::size_t> k(keep.begin(), keep.end());
  for (auto i : keep)
    vs.push_back(q.vertices()[i]);
  std::vector<Edge> es;
  for (std::size_t h = 0; h < q.edge_count(); ++h)
    if (k.count(q.out(h)) && k.count(q.in(h)))
      es.push_back(q.edges()[h]);
  return Quiver(vs, es);
}

} // namespace

long long euler_form(const Quiver &q, const DimVector &a, const DimVector &b) {
  check_size(q, a);
  check_size(q, b);
  long long s = 0;
  for (std::size_t i = 0; i < q.size(); ++i)
    s += a[i] * b[i];
  for (std::size_t h = 0; h < q.edge_count(); ++h)
    s -= a[q.out(h)] * b[q.in(h)];
  return s;
}

int euler_cocycle(const Quiver &q, const DimVector &a, const DimVector &b) {
  return (euler_form(q, a, b) % 2 == 0) ? 1 : -1;
}

long long cartan_pairing(const Quiver &q, const DimVector &a, const DimVector &b) {
  return euler_form(q, a, b) + euler_form(q, b, a);
}

std::vector<std::vector<long long>> cartan_matrix(const Quiver &q) {
  std::vector<std::vector<long long>> m(q.size(), std::vector<long long>(q.size()));
  for (std::size_t i = 0; i < q.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j)
      m[i][j] = cartan_pairing(q, q.simple(i), q.simple(j));
  return m;
}

DimVector reflect(const Quiver &q, const std::string &i, const DimVector &a) {
  std::size_t k = q.index(i);
  DimVector r = a;
  r[k] -= cartan_pairing(q, q.simple(k), a);
  return r;
}

DimVector first_imaginary_root(const Quiver &q) {
  DynkinClass c = classify(q);
  if (!c.affine() && c.kind != DynkinKind::Jordan)
    throw std::invalid_argument("first imaginary root requires an affine quiver");
  auto ker = integer_kernel(cartan_matrix(q));
  if (ker.size() != 1)
    throw std::logic_error("affine Cartan matrix must have a one-dimensional radical");
  DimVector d;
  bool negate = false;
  for (const auto &v : ker[0])
    if (v != 0) {
      negate = v < 0;
      break;
    }
  for (const auto &v : ker[0])
    d.push_back((negate ? -v : v).get_si());
  for (auto v : d)
    if (v <= 0)
      throw std::logic_error("radical vector is not positive");
  return d;
}

std::vector<std::string> extending_vertices(const Quiver &q) {
  DimVector d = first_imaginary_root(q);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < q.size(); ++i)
    if (d[i] == 1)
      out.push_back(q.vertices()[i]);
  if (q.size() > 1)
    for (const auto &p : out) {
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < q.size(); ++i)
        if (q.vertices()[i] != p)
          keep.push_back(i);
      if (!classify(induced(q, keep)).finite())
        throw std::logic_error("removing extending vertex " + p + " does not give finite type");
    }
  return out;
}

long long defect(const Quiver &q, const DimVector &a) {
  return euler_form(q, first_imaginary_root(q), a);
}

bool is_sink(const Quiver &q, std::size_t i) {
  for (std::size_t h = 0; h < q.edge_count(); ++h)
    if (q.out(h) == i)
      return false;
  return true;
}

bool is_source(const Quiver &q, std::size_t i) {
  for (std::size_t h = 0; h < q.edge_count(); ++h)
    if (q.in(h) == i)
      return false;
  return true;
}

bool is_admissible(const Quiver &q, const std::string &i) {
  std::size_t k = q.index(i);
  return is_sink(q, k) || is_source(q, k);
}

Quiver reflect_quiver(const Quiver &q, const std::string &i) {
  if (!is_admissible(q, i))
    throw std::invalid_argument("vertex " + i + " is neither a sink nor a source");
  std::vector<Edge> es = q.edges();
  for (auto &e : es)
    if (e.out == i || e.in == i)
      std::swap(e.out, e.in);
  return Quiver(q.vertices(), es);
}

WeylWord coxeter_element(const Quiver &q) {
  if (q.has_loop())
    throw std::invalid_argument("no Coxeter element: quiver has a loop");
  std::vector<bool> removed(q.size(), false);
  std::vector<std::string> order; // order[0] acts first
  for (std::size_t step = 0; step < q.size(); ++step) {
    std::string best;
    bool found = false;
    for (std::size_t i = 0; i < q.size(); ++i) {
      if (removed[i])
        continue;
      bool sink = true;
      for (std::size_t h = 0; h < q.edge_count() && sink; ++h)
        if (q.out(h) == i && !removed[q.in(h)])
          sink = false;
      if (sink && (!found || q.vertices()[i] < best)) {
        best = q.vertices()[i];
        found = true;
      }
    }
    if (!found)
      throw std::invalid_argument("no Coxeter element: quiver has an oriented cycle");
    removed[q.index(best)] = true;
    order.push_back(best);
  }
  return WeylWord(order.rbegin(), order.rend());
}

DimVector apply_word(const Quiver &q, const WeylWord &w, const DimVector &a) {
  check_size(q, a);
  DimVector r = a;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    r = reflect(q, *it, r);
  return r;
}

DimVector coxeter_transform(const Quiver &q, const DimVector &a) {
  return apply_word(q, coxeter_element(q), a);
}

std::string DynkinClass::describe() const {
  std::string s;
  switch (kind) {
  case DynkinKind::FiniteIrreducible:
    s = "FiniteIrreducible(" + type + ")";
    break;
  case DynkinKind::FiniteReducible: {
    s = "FiniteReducible(";
    for (std::size_t i = 0; i < components.size(); ++i)
      s += (i ? "," : "") + components[i];
    s += ")";
    break;
  }
  case DynkinKind::Affine:
    s = "Affine(" + type + ")";
    break;
  case DynkinKind::Jordan:
    s = "Jordan(C_1)";
    break;
  case DynkinKind::Other:
    s = "Other";
    break;
  }
  if (kronecker)
    s += "+Kronecker";
  if (cyclic)
    s += "+CyclicOrientation(C_" + std::to_string(cyclic) + ")";
  return s;
}

std::string shape_name(const Quiver &q, bool affine) {
  std::size_t n = q.size();
  std::vector<std::set<std::size_t>> adj(n);
  std::map<std::pair<std::size_t, std::size_t>, int> mult;
  for (std::size_t h = 0; h < q.edge_count(); ++h) {
    auto a = std::min(q.out(h), q.in(h)), b = std::max(q.out(h), q.in(h));
    adj[a].insert(b);
    adj[b].insert(a);
    ++mult[{a, b}];
  }
  std::string rank = std::to_string(affine ? n - 1 : n);
  if (affine && (n == 2 || q.edge_count() == n))
    return "A(1)_" + rank;
  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < n; ++i)
    if (adj[i].size() >= 3)
      branch.push_back(i);
  if (branch.empty())
    return "A_" + rank;
  if (branch.size() == 2 || adj[branch[0]].size() == 4)
    return (affine ? "D(1)_" : "D_") + rank;
  // one branch node of degree 3: measure arm lengths
  std::size_t c = branch[0];
  std::vector<std::size_t> arms;
  for (auto start : adj[c]) {
    std::size_t len = 1, prev = c, cur = start;
    while (adj[cur].size() == 2) {
      std::size_t next = *adj[cur].begin() == prev ? *adj[cur].rbegin() : *adj[cur].begin();
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1)
    return (affine ? "D(1)_" : "D_") + rank;
  if (!affine && arms[0] == 1 && arms[1] == 2 && arms[2] <= 4)
    return "E_" + rank;
  if (affine && ((arms == std::vector<std::size_t>{2, 2, 2}) ||
                 (arms == std::vector<std::size_t>{1, 3, 3}) ||
                 (arms == std::vector<std::size_t>{1, 2, 5})))
    return "E(1)_" + rank;
  throw std::logic_error("definite graph with unrecognized shape");
}

DynkinClass classify(const Quiver &q) {
  DynkinClass c;
  if (q.has_loop()) {
    if (q.size() == 1 && q.edge_count() == 1) {
      c.kind = DynkinKind::Jordan;
      c.type = "C_1";
      c.cyclic = 1;
      return c;
    }
    throw std::invalid_argument("loops are only allowed in the one-vertex Jordan quiver");
  }
  auto comp = components(q);
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < q.size(); ++i)
    groups[comp[i]].push_back(i);
  Definiteness whole = definiteness(cartan_matrix(q));
  if (whole == Definiteness::Indefinite)
    return c;
  if (whole == Definiteness::PositiveDefinite) {
    for (const auto &[root, members] : groups)
      c.components.push_back(shape_name(induced(q, members), false));
    if (c.components.size() == 1) {
      c.kind = DynkinKind::FiniteIrreducible;
      c.type = c.components[0];
      c.components.clear();
    } else {
      c.kind = DynkinKind::FiniteReducible;
    }
    return c;
  }
  if (groups.size() != 1)
    return c; // semidefinite but disconnected: outside the supported tags
  c.kind = DynkinKind::Affine;
  c.type = shape_name(q, true);
  if (q.size() == 2 && q.edge_count() == 2 && q.out(0) == q.out(1))
    c.kronecker = true;
  if (c.type.rfind("A(1)_", 0) == 0) {
    bool cyclic = true;
    for (std::size_t i = 0; i < q.size(); ++i) {
      int ins = 0, outs = 0;
      for (std::size_t h = 0; h < q.edge_count(); ++h) {
        ins += q.in(h) == i;
        outs += q.out(h) == i;
      }
      if (ins != 1 || outs != 1)
        cyclic = false;
    }
    if (cyclic)
      c.cyclic = q.size();
  }
  return c;
}

} // namespace qh
