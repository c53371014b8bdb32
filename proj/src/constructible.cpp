#include "qh/constructible.hpp"

namespace qh {

namespace {

bool tube_key(const std::string &k) { return k.rfind("Tube(@,", 0) == 0 || k.rfind("Tube(*,", 0) == 0; }

} // namespace

Rational ConstructibleFn::at(const std::string &key) const {
  if (key == "~" || key == "0")
    return 0;
  std::string k = key;
  if (tube_key(k))
    k = "Tube(*," + k.substr(7);
  auto it = values.find(k);
  return it == values.end() ? Rational(0) : it->second;
}

bool ConstructibleFn::is_zero() const {
  for (const auto &[k, v] : values)
    if (v != 0)
      return false;
  return true;
}

void ConstructibleFn::prune() {
  for (auto it = values.begin(); it != values.end();)
    it = it->second == 0 ? values.erase(it) : std::next(it);
}

Json ConstructibleFn::to_json() const {
  Json j;
  j["grade"] = grade;
  Json v = Json::object();
  for (const auto &[k, x] : values)
    if (x != 0)
      v[k] = x.get_str();
  j["values"] = v;
  return j;
}

ConstructibleFn indicator(const DimVector &grade, const std::string &key, const Rational &v) {
  ConstructibleFn f{grade, {}};
  if (v != 0)
    f.values[key] = v;
  return f;
}

ConstructibleFn add(const ConstructibleFn &f, const ConstructibleFn &g) {
  if (f.grade != g.grade)
    throw std::invalid_argument("adding functions of different grades");
  ConstructibleFn r = f;
  for (const auto &[k, v] : g.values)
    r.values[k] += v;
  r.prune();
  return r;
}

ConstructibleFn scaled(const Rational &k, const ConstructibleFn &f) {
  ConstructibleFn r{f.grade, {}};
  for (const auto &[key, v] : f.values)
    r.values[key] = k * v;
  r.prune();
  return r;
}

ConstructibleFn sub(const ConstructibleFn &f, const ConstructibleFn &g) { return add(f, scaled(-1, g)); }

ConstructibleFn generator(const HallEngine &e, std::size_t i) {
  DimVector g = e.quiver().simple(i);
  auto keys = e.indecomposable_targets(g);
  if (keys.size() != 1)
    throw std::logic_error("simple grade with " + std::to_string(keys.size()) + " classes");
  return indicator(g, keys.front());
}

ConstructibleFn star(HallEngine &e, const ConstructibleFn &f, const ConstructibleFn &g, bool full) {
  ConstructibleFn r{qh::add(f.grade, g.grade), {}};
  if (f.is_zero() || g.is_zero())
    return r;
  auto targets = full ? e.all_targets(r.grade) : e.indecomposable_targets(r.grade);
  for (const auto &t : targets) {
    Rational s = 0;
    for (const auto &[k, h] : e.table(t, f.grade, full))
      s += f.at(k.first) * g.at(k.second) * Rational(h.chi);
    if (s != 0)
      r.values[t] = s;
  }
  return r;
}

ConstructibleFn bracket(HallEngine &e, const ConstructibleFn &f, const ConstructibleFn &g, bool full) {
  if (f == g)
    return ConstructibleFn{qh::add(f.grade, g.grade), {}};
  return sub(star(e, f, g, full), star(e, g, f, full));
}

std::vector<Rational> coordinates(const ConstructibleFn &f, const std::vector<std::string> &keys) {
  std::vector<Rational> c;
  std::size_t hit = 0;
  for (const auto &k : keys) {
    auto it = f.values.find(k);
    c.push_back(it == f.values.end() ? Rational(0) : it->second);
    hit += it != f.values.end();
  }
  if (hit != f.values.size())
    throw std::logic_error("function has values outside the key list of grade " + vec_str(f.grade));
  return c;
}

ConstructibleFn from_coordinates(const DimVector &grade, const std::vector<std::string> &keys,
                                 const std::vector<Rational> &c) {
  ConstructibleFn f{grade, {}};
  for (std::size_t k = 0; k < keys.size(); ++k)
    if (c[k] != 0)
      f.values[keys[k]] = c[k];
  return f;
}

} // namespace qh
