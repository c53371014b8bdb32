#pragma once

#include <algorithm>
#include <vector>

#include "qh/catalog.hpp"

namespace qh {

// Candidate indecomposables with dims <= bound, ordered by total dimension,
// then dims, then label.
template <class F>
std::vector<Label> candidate_labels(const Catalog<F> &cat, const DimVector &bound,
                                    const std::vector<Point> &extra_points = {}) {
  const Family &fam = cat.family();
  std::vector<DimVector> roots;
  if (fam.kind == FamilyKind::Finite) {
    for (const auto &r : positive_roots(fam.q))
      roots.push_back(r.vector);
  } else if (fam.kind == FamilyKind::Jordan) {
    for (long long k = 1; k <= bound[0]; ++k)
      roots.push_back(DimVector{k});
  } else {
    long long n = 1;
    for (std::size_t v = 0; v < bound.size(); ++v)
      n = std::max(n, (bound[v] + fam.delta[v] - 1) / fam.delta[v]);
    for (const auto &r : roots_up_to(fam.q, static_cast<int>(n)))
      roots.push_back(r.vector);
  }
  std::vector<Label> out;
  for (const auto &r : roots) {
    if (!dominated(r, bound))
      continue;
    long long n = imaginary_multiple(fam, r);
    bool enumerable = std::is_same_v<F, PrimeField> || n == 0 || fam.kind == FamilyKind::Cyclic ||
                      fam.kind == FamilyKind::Jordan;
    if (enumerable) {
      for (auto &l : cat.labels(r))
        out.push_back(l);
      continue;
    }
    for (const auto &z : extra_points)
      if (cat.exceptional_tube(z) < 0)
        out.push_back(cat.point_label(z, n));
    if (fam.kind == FamilyKind::AffineA)
      for (std::size_t i = 0; i < fam.tube_count(); ++i)
        for (std::size_t j = 0; j < fam.table.orbits[i].size(); ++j)
          out.push_back(cat.exc_label(i, j, n));
  }
  std::sort(out.begin(), out.end(), [](const Label &x, const Label &y) {
    auto hx = height(x.dims), hy = height(y.dims);
    if (hx != hy)
      return hx < hy;
    if (x.dims != y.dims)
      return x.dims < y.dims;
    return x.str() < y.str();
  });
  return out;
}

struct IdentifyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Krull-Schmidt decomposition: solves dim Hom(P, M) = sum_L m_L dim Hom(P, P_L)
// over the candidates P, together with the dual system, then certifies the
// answer by an isomorphism test.
template <class F> std::vector<Label> identify(const Catalog<F> &cat, const Rep<F> &m) {
  const Quiver &q = cat.quiver();
  const F &f = cat.field();
  check_shapes(q, m);
  if (total_dim(m) == 0)
    return {};
  if (auto l = cat.identify_indecomposable(m))
    return {*l};
  std::vector<Point> extra;
  if constexpr (std::is_same_v<F, RationalField>) {
    const Family &fam = cat.family();
    extra = {Point{1, 0}, Point{0, 1}};
    if (fam.kind == FamilyKind::Kronecker && m.dims[0] == m.dims[1])
      for (const auto &z : kronecker_spec(f, m.maps[0], m.maps[1]))
        if (std::find(extra.begin(), extra.end(), z) == extra.end())
          extra.push_back(z);
  }
  auto cands = candidate_labels(cat, m.dims, extra);
  std::vector<Rep<F>> reps;
  for (const auto &l : cands)
    reps.push_back(cat.build(l));
  std::size_t k = cands.size();
  RationalField qf;
  Matrix<Rational> h(2 * k, k, Rational(0));
  std::vector<Rational> rhs(2 * k);
  for (std::size_t r = 0; r < k; ++r) {
    rhs[r] = static_cast<long>(hom_dim(q, f, reps[r], m));
    rhs[k + r] = static_cast<long>(hom_dim(q, f, m, reps[r]));
    for (std::size_t c = 0; c < k; ++c) {
      h(r, c) = static_cast<long>(hom_dim(q, f, reps[r], reps[c]));
      h(k + r, c) = static_cast<long>(hom_dim(q, f, reps[c], reps[r]));
    }
  }
  if (rank(qf, h) < k)
    throw IdentifyError("fingerprint system singular for dims " + vec_str(m.dims));
  std::vector<Rational> x;
  if (!solve(qf, h, rhs, x))
    throw IdentifyError("representation is not a sum of catalog indecomposables over " + f.spec().name());
  std::vector<Label> out;
  Rep<F> sum = zero_rep(q, f, q.zero());
  for (std::size_t c = 0; c < k; ++c) {
    if (x[c] < 0 || x[c].get_den() != 1)
      throw IdentifyError("fingerprint solution is not a nonnegative integer vector");
    for (long t = 0; t < x[c].get_num().get_si(); ++t) {
      out.push_back(cands[c]);
      sum = direct_sum(q, f, sum, reps[c]);
    }
  }
  if (!isomorphic(q, f, sum, m))
    throw IdentifyError("fingerprint solution failed the isomorphism certificate");
  return out;
}

} // namespace qh
