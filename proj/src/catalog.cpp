#include "qh/catalog.hpp"

#include <sstream>

namespace qh {

namespace {

std::string join_ints(std::initializer_list<long long> xs) {
  std::string s;
  for (auto x : xs)
    s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

std::vector<long long> parse_ints(const std::string &body) {
  std::vector<long long> out;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ','))
    out.push_back(std::stoll(tok));
  return out;
}

void walk_cycle(Family &fam, bool oriented) {
  const Quiver &q = fam.q;
  std::size_t m = q.size();
  std::size_t cur = 0, prev_edge = q.edge_count();
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t chosen = q.edge_count();
    for (std::size_t h = 0; h < q.edge_count(); ++h) {
      if (h == prev_edge)
        continue;
      bool incident = oriented ? q.out(h) == cur : (q.out(h) == cur || q.in(h) == cur);
      if (incident) {
        chosen = h;
        break;
      }
    }
    if (chosen == q.edge_count())
      throw std::logic_error("cycle walk lost its way");
    fam.cycle.push_back(cur);
    fam.cycle_edges.push_back(chosen);
    cur = q.out(chosen) == cur ? q.in(chosen) : q.out(chosen);
    prev_edge = chosen;
  }
  if (cur != 0)
    throw std::logic_error("cycle walk did not close");
}

} // namespace

std::string Label::str() const {
  switch (kind) {
  case LabelKind::Root:
    return "Root" + vec_str(dims);
  case LabelKind::KronU:
    return "KronU(" + join_ints({a, b}) + ")";
  case LabelKind::Tube:
    return "Tube(" + z.str() + "," + std::to_string(b) + ")";
  case LabelKind::Exc:
    return "Exc(" + join_ints({a, b, c}) + ")";
  case LabelKind::CyclicP:
    return "P(" + join_ints({a, b}) + ")";
  case LabelKind::Jordan:
    return "J(" + std::to_string(b) + ")";
  }
  return "?";
}

long long imaginary_multiple(const Family &fam, const DimVector &dims) {
  if (fam.kind == FamilyKind::Jordan)
    return dims.size() == 1 ? dims[0] : 0;
  if (fam.kind == FamilyKind::Finite || !is_nonnegative(dims))
    return 0;
  long long n = delta_multiple(dims, fam.delta);
  return n > 0 && dims == scale(n, fam.delta) ? n : 0;
}

bool is_root_of(const Family &fam, const DimVector &dims) {
  if (dims.size() != fam.q.size() || !is_nonnegative(dims) || height(dims) == 0)
    return false;
  if (fam.kind == FamilyKind::Jordan)
    return true;
  if (imaginary_multiple(fam, dims) > 0)
    return true;
  return euler_form(fam.q, dims, dims) == 1;
}

Label parse_label(const Family &fam, const std::string &text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ')
      s += ch;
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')')
    throw std::invalid_argument("bad label '" + text + "'");
  std::string head = s.substr(0, open), body = s.substr(open + 1, s.size() - open - 2);
  Label l;
  auto bad = [&]() { return std::invalid_argument("label '" + text + "' does not fit " + fam.cls.type); };
  try {
    if (head == "Root") {
      l.kind = LabelKind::Root;
      l.dims = parse_ints(body);
      if (!is_root_of(fam, l.dims) || imaginary_multiple(fam, l.dims) > 0)
        throw bad();
      if (fam.kind == FamilyKind::Kronecker || fam.kind == FamilyKind::Cyclic || fam.kind == FamilyKind::Jordan)
        throw std::invalid_argument("use KronU/P/J labels for " + fam.cls.type);
    } else if (head == "KronU") {
      auto v = parse_ints(body);
      if (fam.kind != FamilyKind::Kronecker || v.size() != 2 || v[0] < 0 || v[0] > 1 || v[1] < 0)
        throw bad();
      l.kind = LabelKind::KronU;
      l.a = v[0];
      l.b = v[1];
      l.dims = DimVector(2, v[1]);
      l.dims[v[0] == 0 ? fam.src : 1 - fam.src] += 1;
    } else if (head == "Tube") {
      auto comma = body.rfind(',');
      if (!fam.tubes() || comma == std::string::npos)
        throw bad();
      l.kind = LabelKind::Tube;
      l.z = Point::parse(body.substr(0, comma));
      l.b = std::stoll(body.substr(comma + 1));
      if (l.b < 1)
        throw bad();
      l.dims = scale(l.b, fam.delta);
    } else if (head == "Exc") {
      auto v = parse_ints(body);
      if (fam.kind != FamilyKind::AffineA || v.size() != 3 || v[0] < 0 ||
          static_cast<std::size_t>(v[0]) >= fam.tube_count() || v[1] < 0 ||
          static_cast<std::size_t>(v[1]) >= fam.table.orbits[static_cast<std::size_t>(v[0])].size() || v[2] < 1)
        throw bad();
      l.kind = LabelKind::Exc;
      l.a = v[0];
      l.b = v[1];
      l.c = v[2];
      l.dims = scale(v[2], fam.delta);
    } else if (head == "P") {
      auto v = parse_ints(body);
      std::size_t n = fam.cycle.size();
      if (fam.kind != FamilyKind::Cyclic || v.size() != 2 || v[0] < 0 || static_cast<std::size_t>(v[0]) >= n ||
          v[1] < 1)
        throw bad();
      l.kind = LabelKind::CyclicP;
      l.a = v[0];
      l.b = v[1];
      l.dims = DimVector(fam.q.size(), 0);
      for (long long k = 0; k < v[1]; ++k)
        l.dims[fam.cycle[static_cast<std::size_t>(v[0] + k) % n]] += 1;
    } else if (head == "J") {
      auto v = parse_ints(body);
      if (fam.kind != FamilyKind::Jordan || v.size() != 1 || v[0] < 1)
        throw bad();
      l.kind = LabelKind::Jordan;
      l.b = v[0];
      l.dims = DimVector{v[0]};
    } else {
      throw bad();
    }
  } catch (const std::logic_error &e) {
    if (dynamic_cast<const std::invalid_argument *>(&e) && std::string(e.what()).rfind("label", 0) == 0)
      throw;
    throw std::invalid_argument("bad label '" + text + "': " + e.what());
  }
  return l;
}

std::vector<Label> parse_labels(const Family &fam, const std::string &s) {
  std::vector<Label> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    depth += ch == '(';
    depth -= ch == ')';
    if (ch == '+' && depth == 0) {
      out.push_back(parse_label(fam, cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(parse_label(fam, cur));
  return out;
}

std::string labels_str(std::vector<Label> ls) {
  std::vector<std::string> names;
  for (const auto &l : ls)
    names.push_back(l.str());
  std::sort(names.begin(), names.end());
  std::string s;
  for (const auto &n : names)
    s += (s.empty() ? "" : "+") + n;
  return s;
}

std::shared_ptr<const Family> make_family(const Quiver &q) {
  auto fam = std::make_shared<Family>();
  fam->q = q;
  fam->cls = classify(q);
  const DynkinClass &c = fam->cls;
  if (c.finite()) {
    fam->kind = FamilyKind::Finite;
    return fam;
  }
  if (c.kind == DynkinKind::Jordan) {
    fam->kind = FamilyKind::Jordan;
    fam->delta = DimVector{1};
    return fam;
  }
  if (!c.affine())
    throw std::invalid_argument("representations are supported for finite, Jordan and affine quivers only");
  fam->delta = first_imaginary_root(q);
  if (c.kronecker) {
    fam->kind = FamilyKind::Kronecker;
    fam->src = q.out(0);
    return fam;
  }
  if (c.cyclic) {
    fam->kind = FamilyKind::Cyclic;
    walk_cycle(*fam, true);
    return fam;
  }
  fam->table = cyclic_roots(q);
  fam->p = q.index(fam->table.p);
  for (std::size_t h = 0; h < q.edge_count(); ++h)
    if (q.in(h) == fam->p)
      fam->p_edges.push_back(h);
  if (!c.affine_a()) {
    fam->kind = FamilyKind::AffineDE;
    return fam;
  }
  fam->kind = FamilyKind::AffineA;
  walk_cycle(*fam, false);
  if (!fam->table.p_sink || fam->p_edges.size() != 2)
    throw std::logic_error("affine A quiver without an extending sink");

  // Exceptional points: the module K H_z(J_1) of an exceptional tube is a
  // string whose only missing arrow enters p, so z is (1:0) or (0:1).
  RationalField f;
  Catalog<RationalField> probe(fam, f);
  fam->exc_points.assign(fam->tube_count(), Point{});
  fam->k_index.assign(fam->tube_count(), 0);
  std::vector<bool> seen(fam->tube_count(), false);
  for (const auto &z : {Point{1, 0}, Point{0, 1}}) {
    Rep<RationalField> kh = probe.build(probe.point_label(z, 1));
    for (std::size_t i = 0; i < fam->tube_count(); ++i)
      for (std::size_t j = 0; j < fam->table.orbits[i].size(); ++j)
        if (hom_dim(q, f, kh, probe.quasi_simple(i, j)) > 0) {
          if (seen[i])
            throw std::logic_error("tube " + std::to_string(i) + " met twice");
          seen[i] = true;
          fam->exc_points[i] = z;
          fam->k_index[i] = j;
        }
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i])
      throw std::logic_error("no exceptional point found for tube " + std::to_string(i));
  return fam;
}

} // namespace qh
