#include "qh/hall.hpp"

#include <future>
#include <set>

namespace qh {

using PF = PrimeField;
using Elem = PF::Elem;

Json HallCount::to_json() const {
  Json j;
  j["sub"] = sub;
  j["quot"] = quot;
  j["target"] = target;
  j["primes"] = primes;
  Json cs = Json::array(), ps = Json::array();
  for (const auto &c : counts)
    cs.push_back(c.get_str());
  for (const auto &c : poly)
    ps.push_back(c.get_str());
  j["counts"] = cs;
  j["polynomial"] = ps;
  j["chi"] = chi.get_str();
  j["held_out_prime"] = primes.empty() ? 0u : primes.back();
  j["held_out_ok"] = held_out_ok;
  return j;
}

long long degree_bound(const DimVector &sub, const DimVector &total) {
  long long d = 0;
  for (std::size_t i = 0; i < sub.size(); ++i)
    d += sub[i] * (total[i] - sub[i]);
  return d;
}

HallCount interpolate_count(std::string sub, std::string quot, std::string target,
                            const std::vector<std::uint32_t> &primes, const std::vector<Integer> &counts) {
  if (primes.size() < 2 || primes.size() != counts.size())
    throw OracleError("interpolation needs at least two samples");
  HallCount h{std::move(sub), std::move(quot), std::move(target), primes, counts, {}, 0, false};
  std::size_t m = primes.size() - 1;
  std::vector<Rational> coef(m, Rational(0));
  for (std::size_t k = 0; k < m; ++k) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    Rational xk(static_cast<unsigned long>(primes[k]));
    for (std::size_t j = 0; j < m; ++j) {
      if (j == k)
        continue;
      Rational xj(static_cast<unsigned long>(primes[j]));
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * xj;
      }
      basis = next;
      denom *= xk - xj;
    }
    for (std::size_t d = 0; d < basis.size(); ++d)
      coef[d] += Rational(counts[k]) * basis[d] / denom;
  }
  auto describe = [&]() {
    std::string s = "n(" + h.sub + ", " + h.quot + "; " + h.target + ") counts";
    for (std::size_t k = 0; k < primes.size(); ++k)
      s += " q=" + std::to_string(primes[k]) + ":" + counts[k].get_str();
    return s;
  };
  for (auto &c : coef) {
    c.canonicalize();
    if (c.get_den() != 1)
      throw OracleError("non-integer interpolation coefficient " + c.get_str() + " for " + describe());
    h.poly.push_back(c.get_num());
  }
  while (h.poly.size() > 1 && h.poly.back() == 0)
    h.poly.pop_back();
  auto eval = [&](const Integer &x) {
    Integer s = 0;
    for (std::size_t d = h.poly.size(); d-- > 0;)
      s = s * x + h.poly[d];
    return s;
  };
  h.held_out_ok = eval(Integer(static_cast<unsigned long>(primes.back()))) == counts.back();
  if (!h.held_out_ok)
    throw OracleError("held-out prime disagrees with the interpolated polynomial: " + describe());
  h.chi = eval(Integer(1));
  return h;
}

namespace {

using Mat = FMat<PF>;

// All e x m matrices in reduced row echelon form of full row rank.
void for_each_rref(const PF &f, std::size_t e, std::size_t m, const std::function<void(const Mat &)> &fn) {
  if (e > m)
    return;
  std::vector<std::size_t> piv(e);
  for (std::size_t k = 0; k < e; ++k)
    piv[k] = k;
  while (true) {
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    std::vector<bool> is_piv(m, false);
    for (auto c : piv)
      is_piv[c] = true;
    for (std::size_t r = 0; r < e; ++r)
      for (std::size_t c = piv[r] + 1; c < m; ++c)
        if (!is_piv[c])
          free_pos.emplace_back(r, c);
    Mat x = zeros(f, e, m);
    for (std::size_t r = 0; r < e; ++r)
      x(r, piv[r]) = f.one();
    std::vector<Elem> odo(free_pos.size(), 0);
    while (true) {
      for (std::size_t k = 0; k < free_pos.size(); ++k)
        x(free_pos[k].first, free_pos[k].second) = odo[k];
      fn(x);
      std::size_t k = 0;
      while (k < odo.size() && ++odo[k] == f.modulus())
        odo[k++] = 0;
      if (k == odo.size())
        break;
    }
    // next pivot combination
    std::size_t k = e;
    while (k > 0 && piv[k - 1] == m - e + k - 1)
      --k;
    if (k == 0)
      break;
    ++piv[k - 1];
    for (std::size_t j = k; j < e; ++j)
      piv[j] = piv[j - 1] + 1;
  }
}

struct Sub {
  Mat rows; // rref basis as rows
  std::vector<std::size_t> piv, nonpiv;
};

Sub make_sub(const PF &f, Mat rows, std::size_t n) {
  Sub s;
  s.piv = rref(f, rows);
  s.rows = zeros(f, s.piv.size(), n);
  for (std::size_t r = 0; r < s.piv.size(); ++r)
    for (std::size_t c = 0; c < n; ++c)
      s.rows(r, c) = rows(r, c);
  std::vector<bool> is_piv(n, false);
  for (auto c : s.piv)
    is_piv[c] = true;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_piv[c])
      s.nonpiv.push_back(c);
  return s;
}

// y minus its component along the rows of s, so the pivot entries vanish.
std::vector<Elem> reduce(const PF &f, const Sub &s, std::vector<Elem> y) {
  for (std::size_t r = 0; r < s.piv.size(); ++r) {
    Elem c = y[s.piv[r]];
    if (c == 0)
      continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      y[j] = f.sub(y[j], f.mul(c, s.rows(r, j)));
  }
  return y;
}

std::vector<Elem> apply(const PF &f, const Mat &x, const Mat &rows, std::size_t r) {
  std::vector<Elem> y(x.rows, 0);
  for (std::size_t i = 0; i < x.rows; ++i) {
    Elem s = 0;
    for (std::size_t k = 0; k < x.cols; ++k)
      s = f.add(s, f.mul(x(i, k), rows(r, k)));
    y[i] = s;
  }
  return y;
}

bool stable_edge(const PF &f, const Mat &x, const Sub &from, const Sub &to) {
  for (std::size_t r = 0; r < from.rows.rows; ++r) {
    auto y = reduce(f, to, apply(f, x, from.rows, r));
    for (auto v : y)
      if (v != 0)
        return false;
  }
  return true;
}

std::vector<std::size_t> vertex_order(const Quiver &q) {
  std::vector<std::size_t> indeg(q.size(), 0), order;
  for (std::size_t h = 0; h < q.edge_count(); ++h)
    if (q.out(h) != q.in(h))
      ++indeg[q.in(h)];
  std::vector<bool> done(q.size(), false);
  while (order.size() < q.size()) {
    std::size_t pick = q.size();
    for (std::size_t v = 0; v < q.size() && pick == q.size(); ++v)
      if (!done[v] && indeg[v] == 0)
        pick = v;
    if (pick == q.size()) // oriented cycle: fall back to index order for the rest
      for (std::size_t v = 0; v < q.size() && pick == q.size(); ++v)
        if (!done[v])
          pick = v;
    done[pick] = true;
    order.push_back(pick);
    for (std::size_t h = 0; h < q.edge_count(); ++h)
      if (q.out(h) == pick && q.in(h) != pick && indeg[q.in(h)] > 0)
        --indeg[q.in(h)];
  }
  return order;
}

} // namespace

std::size_t enumerate_subreps(const Quiver &q, const PF &f, const Rep<PF> &c, const DimVector &d,
                              const std::function<void(const Rep<PF> &, const Rep<PF> &)> &visit,
                              std::size_t limit) {
  for (std::size_t v = 0; v < q.size(); ++v)
    if (d[v] < 0 || d[v] > c.dims[v])
      return 0;
  auto order = vertex_order(q);
  std::vector<Sub> w(q.size());
  std::vector<bool> assigned(q.size(), false);
  std::size_t visited = 0;

  auto leaf = [&]() {
    Rep<PF> sub, quot;
    sub.dims = d;
    for (std::size_t v = 0; v < q.size(); ++v)
      quot.dims.push_back(c.dims[v] - d[v]);
    for (std::size_t h = 0; h < q.edge_count(); ++h) {
      const Sub &a = w[q.out(h)], &b = w[q.in(h)];
      const Mat &x = c.maps[h];
      Mat s = zeros(f, b.piv.size(), a.piv.size());
      for (std::size_t k = 0; k < a.piv.size(); ++k) {
        auto y = apply(f, x, a.rows, k);
        for (std::size_t r = 0; r < b.piv.size(); ++r)
          s(r, k) = y[b.piv[r]];
      }
      Mat t = zeros(f, b.nonpiv.size(), a.nonpiv.size());
      for (std::size_t k = 0; k < a.nonpiv.size(); ++k) {
        std::vector<Elem> y(x.rows);
        for (std::size_t i = 0; i < x.rows; ++i)
          y[i] = x(i, a.nonpiv[k]);
        y = reduce(f, b, y);
        for (std::size_t r = 0; r < b.nonpiv.size(); ++r)
          t(r, k) = y[b.nonpiv[r]];
      }
      sub.maps.push_back(s);
      quot.maps.push_back(t);
    }
    visit(sub, quot);
  };

  std::function<void(std::size_t)> dfs = [&](std::size_t k) {
    if (k == order.size()) {
      leaf();
      return;
    }
    std::size_t v = order[k];
    auto n = static_cast<std::size_t>(c.dims[v]);
    auto dd = static_cast<std::size_t>(d[v]);
    // forced part: images of assigned subspaces; allowed part: preimages
    Mat span = zeros(f, 0, n);
    Mat cond = zeros(f, 0, n);
    for (std::size_t h = 0; h < q.edge_count(); ++h) {
      std::size_t u = q.out(h), t = q.in(h);
      if (t == v && u != v && assigned[u])
        for (std::size_t r = 0; r < w[u].rows.rows; ++r) {
          auto y = apply(f, c.maps[h], w[u].rows, r);
          Mat row = zeros(f, 1, n);
          for (std::size_t i = 0; i < n; ++i)
            row(0, i) = y[i];
          span = vstack(f, span, row);
        }
      if (u == v && t != v && assigned[t]) {
        // rows: quotient coordinates of x_h(.) modulo W_t
        const Sub &s = w[t];
        for (auto np : s.nonpiv) {
          Mat row = zeros(f, 1, n);
          for (std::size_t i = 0; i < n; ++i) {
            std::vector<Elem> col(c.maps[h].rows);
            for (std::size_t r = 0; r < col.size(); ++r)
              col[r] = c.maps[h](r, i);
            row(0, i) = reduce(f, s, col)[np];
          }
          cond = vstack(f, cond, row);
        }
      }
    }
    Mat forced = span.rows ? transpose(f, column_basis(f, transpose(f, span))) : zeros(f, 0, n);
    Mat allowed = transpose(f, nullspace(f, cond.rows ? cond : zeros(f, 1, n)));
    if (forced.rows > dd)
      return;
    if (forced.rows && rank(f, vstack(f, allowed, forced)) != allowed.rows)
      return;
    // complement of forced inside allowed
    Mat comp = zeros(f, 0, n), acc = forced;
    for (std::size_t r = 0; r < allowed.rows; ++r) {
      Mat row = zeros(f, 1, n);
      for (std::size_t i = 0; i < n; ++i)
        row(0, i) = allowed(r, i);
      Mat trial = vstack(f, acc, row);
      if (rank(f, trial) > acc.rows) {
        acc = trial;
        comp = vstack(f, comp, row);
      }
    }
    std::size_t e = dd - forced.rows;
    if (e > comp.rows)
      return;
    for_each_rref(f, e, comp.rows, [&](const Mat &coef) {
      Mat rows = vstack(f, forced, e ? multiply(f, coef, comp) : zeros(f, 0, n));
      w[v] = make_sub(f, rows, n);
      if (++visited > limit)
        throw OracleError("subspace enumeration exceeded " + std::to_string(limit) + " candidates");
      for (std::size_t h = 0; h < q.edge_count(); ++h) {
        std::size_t u = q.out(h), t = q.in(h);
        bool relevant = (u == v || t == v) && (u == v || assigned[u]) && (t == v || assigned[t]);
        if (relevant && !stable_edge(f, c.maps[h], w[u], w[t]))
          return;
      }
      assigned[v] = true;
      dfs(k + 1);
      assigned[v] = false;
    });
  };
  dfs(0);
  return visited;
}

HallEngine::HallEngine(const Quiver &q, HallConfig cfg) : fam_(make_family(q)), cfg_(std::move(cfg)) {}

std::vector<std::string> HallEngine::indecomposable_targets(const DimVector &grade) const {
  const Family &fam = *fam_;
  std::vector<std::string> out;
  if (!is_root_of(fam, grade))
    return out;
  long long n = imaginary_multiple(fam, grade);
  if (n > 0 && fam.kind == FamilyKind::AffineDE && fam.tube_count() > 0)
    throw OracleError("exceptional tubes of affine D/E quivers are outside the counting oracle");
  if (n > 0 && fam.kind != FamilyKind::Jordan && fam.kind != FamilyKind::Cyclic) {
    out.push_back("Tube(*," + std::to_string(n) + ")");
    if (fam.kind == FamilyKind::AffineA) {
      Catalog<RationalField> cat(fam_, RationalField{});
      for (std::size_t i = 0; i < fam.tube_count(); ++i)
        for (std::size_t j = 0; j < fam.table.orbits[i].size(); ++j)
          out.push_back(cat.exc_label(i, j, n).str());
    }
    return out;
  }
  Catalog<RationalField> cat(fam_, RationalField{});
  for (const auto &l : cat.labels(grade))
    out.push_back(l.str());
  return out;
}

std::vector<std::string> HallEngine::all_targets(const DimVector &grade) const {
  if (fam_->kind != FamilyKind::Finite)
    throw std::invalid_argument("decomposable targets are enumerated for finite type only");
  auto roots = positive_roots(fam_->q);
  std::vector<std::string> out;
  std::vector<std::string> cur;
  std::function<void(std::size_t, DimVector)> rec = [&](std::size_t from, DimVector rest) {
    if (height(rest) == 0) {
      std::vector<std::string> s = cur;
      std::sort(s.begin(), s.end());
      std::string key;
      for (const auto &x : s)
        key += (key.empty() ? "" : "+") + x;
      out.push_back(key);
      return;
    }
    for (std::size_t k = from; k < roots.size(); ++k)
      if (dominated(roots[k].vector, rest)) {
        cur.push_back("Root" + vec_str(roots[k].vector));
        rec(k, sub(rest, roots[k].vector));
        cur.pop_back();
      }
  };
  rec(0, grade);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint32_t> HallEngine::pick_primes(long long needed,
                                                   const std::function<bool(std::uint32_t)> &usable) const {
  needed = std::max(needed, static_cast<long long>(cfg_.min_primes));
  std::vector<std::uint32_t> out;
  for (auto p : cfg_.primes) {
    if (static_cast<long long>(out.size()) == needed)
      break;
    if (usable(p))
      out.push_back(p);
  }
  if (static_cast<long long>(out.size()) < needed)
    throw OracleError("need " + std::to_string(needed) + " usable primes; the configured list is too short");
  return out;
}

namespace {

std::string relative_key(const Catalog<PF> &cat, const Rep<PF> &w, const std::optional<Point> &target_point,
                         bool full) {
  if (auto l = cat.identify_indecomposable(w)) {
    if (l->kind != LabelKind::Tube)
      return l->str();
    bool same = target_point && same_point(cat.field(), *target_point, l->z);
    return std::string(same ? "Tube(@," : "Tube(*,") + std::to_string(l->b) + ")";
  }
  if (!full)
    return "~";
  return labels_str(identify(cat, w));
}

Rep<PF> build_sum(const Catalog<PF> &cat, const std::vector<Label> &ls) {
  const Quiver &q = cat.quiver();
  Rep<PF> r = zero_rep(q, cat.field(), q.zero());
  for (const auto &l : ls)
    r = direct_sum(q, cat.field(), r, cat.build(l));
  return r;
}

bool generic_target(const std::string &t) { return t.rfind("Tube(*,", 0) == 0; }

long long generic_n(const std::string &t) { return std::stoll(t.substr(7, t.size() - 8)); }

} // namespace

std::map<CountKey, Integer> HallEngine::count_at_prime(std::uint32_t p, const std::string &target,
                                                       const DimVector &sub, bool full) const {
  PF f(p);
  Catalog<PF> cat(fam_, f);
  const Quiver &q = fam_->q;
  auto run = [&](const Rep<PF> &c, const std::optional<Point> &z) {
    std::map<CountKey, Integer> m;
    enumerate_subreps(
        q, f, c, sub,
        [&](const Rep<PF> &w, const Rep<PF> &quot) {
          m[{relative_key(cat, w, z, full), relative_key(cat, quot, z, full)}] += 1;
        },
        cfg_.max_subspaces);
    return m;
  };
  if (!generic_target(target))
    return run(build_sum(cat, parse_labels(*fam_, target)), std::nullopt);
  long long n = generic_n(target);
  std::optional<std::map<CountKey, Integer>> first;
  std::string first_point;
  for (const auto &z : cat.points()) {
    if (cat.exceptional_tube(z) >= 0)
      continue;
    auto m = run(cat.build(cat.point_label(z, n)), z);
    if (!first) {
      first = m;
      first_point = z.str();
    } else if (m != *first) {
      throw OracleError("counts for " + target + " differ between tube points " + first_point + " and " + z.str() +
                        " over F" + std::to_string(p));
    }
  }
  if (!first)
    throw OracleError("no homogeneous tube point over F" + std::to_string(p));
  return *first;
}

const CountTable &HallEngine::table(const std::string &target, const DimVector &sub, bool full) {
  auto key = std::make_tuple(target, sub, full);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tables_.find(key);
    if (it != tables_.end())
      return *it->second;
  }
  DimVector total;
  if (generic_target(target))
    total = scale(generic_n(target), fam_->delta);
  else {
    total = fam_->q.zero();
    for (const auto &l : parse_labels(*fam_, target))
      total = add(total, l.dims);
  }
  if (height(total) > cfg_.max_total_dim)
    throw OracleError("target " + target + " exceeds the total dimension cap " + std::to_string(cfg_.max_total_dim));
  long long bound = degree_bound(sub, total);
  auto primes = pick_primes(bound + 2, [&](std::uint32_t p) {
    try {
      Catalog<PF> cat(fam_, PF(p));
      if (!generic_target(target))
        build_sum(cat, parse_labels(*fam_, target));
      return true;
    } catch (const std::exception &) {
      return false;
    }
  });
  std::vector<std::map<CountKey, Integer>> per_prime(primes.size());
  if (cfg_.parallel) {
    std::vector<std::future<std::map<CountKey, Integer>>> jobs;
    for (auto p : primes)
      jobs.push_back(std::async(std::launch::async, [&, p]() { return count_at_prime(p, target, sub, full); }));
    for (std::size_t k = 0; k < jobs.size(); ++k)
      per_prime[k] = jobs[k].get();
  } else {
    for (std::size_t k = 0; k < primes.size(); ++k)
      per_prime[k] = count_at_prime(primes[k], target, sub, full);
  }
  std::set<CountKey> keys;
  for (const auto &m : per_prime)
    for (const auto &[k, v] : m)
      keys.insert(k);
  auto table = std::make_unique<CountTable>();
  for (const auto &k : keys) {
    std::vector<Integer> counts;
    for (const auto &m : per_prime) {
      auto it = m.find(k);
      counts.push_back(it == m.end() ? Integer(0) : it->second);
    }
    (*table)[k] = interpolate_count(k.first, k.second, target, primes, counts);
  }
  std::lock_guard<std::mutex> lock(mu_);
  for (const auto &[k, h] : *table)
    log_.push_back(h);
  auto [it, inserted] = tables_.emplace(key, std::move(table));
  return *it->second;
}

HallCount HallEngine::hall_number(const Label &a, const Label &b, const std::vector<Label> &c) {
  DimVector total = fam_->q.zero();
  for (const auto &l : c)
    total = add(total, l.dims);
  if (add(a.dims, b.dims) != total)
    throw std::invalid_argument("dimension vectors of " + a.str() + " and " + b.str() + " do not add up to the target");
  if (height(total) > cfg_.max_total_dim)
    throw OracleError("target exceeds the total dimension cap " + std::to_string(cfg_.max_total_dim));
  std::vector<Point> pts;
  for (const auto *l : {&a, &b})
    if (l->kind == LabelKind::Tube)
      pts.push_back(l->z);
  for (const auto &l : c)
    if (l.kind == LabelKind::Tube)
      pts.push_back(l.z);
  auto primes = pick_primes(degree_bound(a.dims, total) + 2, [&](std::uint32_t p) {
    try {
      PF f(p);
      Catalog<PF> cat(fam_, f);
      for (std::size_t x = 0; x < pts.size(); ++x)
        for (std::size_t y = x + 1; y < pts.size(); ++y)
          if (!(pts[x] == pts[y]) && same_point(f, pts[x], pts[y]))
            return false;
      cat.build(a);
      cat.build(b);
      build_sum(cat, c);
      return true;
    } catch (const std::exception &) {
      return false;
    }
  });
  auto count = [&](std::uint32_t p) {
    PF f(p);
    Catalog<PF> cat(fam_, f);
    Rep<PF> ra = cat.build(a), rb = cat.build(b), rc = build_sum(cat, c);
    Integer n = 0;
    enumerate_subreps(
        fam_->q, f, rc, a.dims,
        [&](const Rep<PF> &w, const Rep<PF> &quot) {
          if (isomorphic_to_indecomposable(fam_->q, f, ra, w) && isomorphic_to_indecomposable(fam_->q, f, rb, quot))
            n += 1;
        },
        cfg_.max_subspaces);
    return n;
  };
  std::vector<Integer> counts(primes.size());
  if (cfg_.parallel) {
    std::vector<std::future<Integer>> jobs;
    for (auto p : primes)
      jobs.push_back(std::async(std::launch::async, count, p));
    for (std::size_t k = 0; k < jobs.size(); ++k)
      counts[k] = jobs[k].get();
  } else {
    for (std::size_t k = 0; k < primes.size(); ++k)
      counts[k] = count(primes[k]);
  }
  HallCount h = interpolate_count(a.str(), b.str(), labels_str(c), primes, counts);
  std::lock_guard<std::mutex> lock(mu_);
  log_.push_back(h);
  return h;
}

std::vector<HallCount> HallEngine::log() const {
  std::lock_guard<std::mutex> lock(mu_);
  return log_;
}

std::size_t HallEngine::tables_computed() const {
  std::lock_guard<std::mutex> lock(mu_);
  return tables_.size();
}

} // namespace qh
