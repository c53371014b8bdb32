#include "qh/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace qh {

bool dominated(const DimVector &a, const DimVector &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i])
      return false;
  return true;
}

bool is_nonnegative(const DimVector &a) {
  return std::all_of(a.begin(), a.end(), [](long long v) { return v >= 0; });
}

DimVector add(const DimVector &a, const DimVector &b) {
  DimVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] += b[i];
  return r;
}

DimVector sub(const DimVector &a, const DimVector &b) {
  DimVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] -= b[i];
  return r;
}

DimVector scale(long long k, const DimVector &a) {
  DimVector r = a;
  for (auto &v : r)
    v *= k;
  return r;
}

long long height(const DimVector &a) {
  long long s = 0;
  for (auto v : a)
    s += v;
  return s;
}

std::string vec_str(const DimVector &a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i)
    s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

long long delta_multiple(const DimVector &a, const DimVector &delta) {
  long long k = -1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    long long m = a[i] >= 0 ? a[i] / delta[i] : -1;
    k = (k < 0 || m < k) ? m : k;
  }
  return std::max<long long>(k, 0);
}

namespace {

template <class Fn> void for_each_in_box(const DimVector &bound, Fn fn) {
  DimVector v(bound.size(), 0);
  while (true) {
    fn(v);
    std::size_t i = 0;
    while (i < v.size() && v[i] == bound[i]) {
      v[i] = 0;
      ++i;
    }
    if (i == v.size())
      return;
    ++v[i];
  }
}

void sort_roots(std::vector<Root> &rs) {
  std::sort(rs.begin(), rs.end(), [](const Root &a, const Root &b) {
    if (height(a.vector) != height(b.vector))
      return height(a.vector) < height(b.vector);
    return a.vector < b.vector;
  });
}

} // namespace

std::vector<Root> positive_roots(const Quiver &q) {
  if (!classify(q).finite())
    throw std::invalid_argument("positive_roots requires a quiver of finite type");
  long long box = 1;
  while (true) {
    std::vector<Root> out;
    long long top = 0;
    for_each_in_box(DimVector(q.size(), box), [&](const DimVector &v) {
      if (height(v) == 0 || cartan_pairing(q, v, v) != 2)
        return;
      out.push_back(Root{v, RootKind::Real, 0});
      top = std::max(top, *std::max_element(v.begin(), v.end()));
    });
    if (top < box) {
      sort_roots(out);
      return out;
    }
    ++box;
  }
}

std::vector<Root> roots_up_to(const Quiver &q, int n) {
  DynkinClass c = classify(q);
  if (!c.affine() && c.kind != DynkinKind::Jordan)
    throw std::invalid_argument("roots_up_to requires an affine quiver");
  if (n < 1)
    throw std::invalid_argument("roots_up_to: n must be positive");
  DimVector delta = first_imaginary_root(q);
  std::vector<Root> out;
  for_each_in_box(scale(n, delta), [&](const DimVector &v) {
    if (height(v) == 0)
      return;
    long long norm = cartan_pairing(q, v, v);
    if (norm == 2) {
      out.push_back(Root{v, RootKind::Real, euler_form(q, delta, v)});
    } else if (norm == 0) {
      long long k = v[0] / delta[0];
      if (scale(k, delta) != v)
        throw std::logic_error("isotropic vector that is not a multiple of delta");
      out.push_back(Root{v, RootKind::Imaginary, 0});
    }
  });
  sort_roots(out);
  return out;
}

} // namespace qh
