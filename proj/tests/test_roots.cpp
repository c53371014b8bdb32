#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "qh/roots.hpp"

using namespace qh;

namespace {

// Oracle: positive part of the Weyl orbit of the simple roots.
std::set<DimVector> weyl_orbit_roots(const Quiver &q) {
  std::set<DimVector> found, frontier;
  for (std::size_t i = 0; i < q.size(); ++i)
    frontier.insert(q.simple(i));
  while (!frontier.empty()) {
    std::set<DimVector> next;
    for (const auto &a : frontier) {
      found.insert(a);
      for (const auto &v : q.vertices()) {
        auto r = reflect(q, v, a);
        if (is_nonnegative(r) && !found.count(r))
          next.insert(r);
      }
    }
    frontier = next;
  }
  return found;
}

std::set<DimVector> vectors(const std::vector<Root> &rs) {
  std::set<DimVector> s;
  for (const auto &r : rs)
    s.insert(r.vector);
  return s;
}

std::vector<std::size_t> sorted(std::vector<std::size_t> v) {
  std::sort(v.begin(), v.end());
  return v;
}

} // namespace

TEST_CASE("finite positive roots") {
  CHECK(vectors(positive_roots(fx::a2())) == std::set<DimVector>{{1, 0}, {0, 1}, {1, 1}});
  CHECK(positive_roots(fx::a3()).size() == 6);
  auto d4 = positive_roots(fx::d4());
  CHECK(d4.size() == 12);
  CHECK(d4.back().vector == DimVector{2, 1, 1, 1});
  auto e6 = fx::make(6, {{1, 0}, {2, 0}, {3, 2}, {4, 0}, {5, 4}});
  CHECK(positive_roots(e6).size() == 36);
  for (const auto &q : {fx::a3(), fx::d4(), e6, fx::make(4, {{0, 1}, {2, 3}})})
    CHECK(vectors(positive_roots(q)) == weyl_orbit_roots(q));
  CHECK_THROWS(positive_roots(fx::kronecker()));
}

TEST_CASE("affine roots up to n delta") {
  auto k = roots_up_to(fx::kronecker(), 1);
  REQUIRE(k.size() == 3);
  CHECK(k[0].vector == DimVector{0, 1});
  CHECK(k[1].vector == DimVector{1, 0});
  CHECK(k[2].vector == DimVector{1, 1});
  CHECK(k[2].kind == RootKind::Imaginary);
  CHECK(k[1].defect == 1);
  for (const auto &r : roots_up_to(fx::kronecker(), 4)) {
    auto a = r.vector[0], b = r.vector[1];
    if (r.real())
      CHECK(std::abs(a - b) == 1);
    else
      CHECK(a == b);
  }
  auto c3 = roots_up_to(fx::cyclic(3), 1);
  CHECK(first_imaginary_root(fx::cyclic(3)) == DimVector{1, 1, 1});
  // proper cyclic segments: 3 of length 1, 3 of length 2, plus delta
  CHECK(c3.size() == 7);
  for (const auto &q : {fx::a2_affine(), fx::d4_affine()}) {
    auto d = first_imaginary_root(q);
    auto rs = roots_up_to(q, 2);
    auto set = vectors(rs);
    for (const auto &r : rs) {
      if (r.real())
        CHECK(cartan_pairing(q, r.vector, r.vector) == 2);
      else
        CHECK((r.vector == d || r.vector == scale(2, d)));
      // alpha + delta stays a root when it fits in the box
      if (r.real() && dominated(add(r.vector, d), scale(2, d)))
        CHECK(set.count(add(r.vector, d)));
    }
  }
  CHECK_THROWS(roots_up_to(fx::a3(), 1));
}

TEST_CASE("cyclic roots reproduce the orbit counts") {
  auto a = cyclic_roots(fx::a2_affine());
  CHECK(a.L() == 1);
  CHECK(a.lengths() == std::vector<std::size_t>{2});
  CHECK(a.orbits[0][0] == DimVector{0, 1, 0});
  CHECK(a.orbits[0][1] == DimVector{1, 0, 1});
  CHECK(a.p == "2");
  CHECK(a.alpha0 == DimVector{1, 1, 0});
  CHECK(sorted(cyclic_roots(fx::d4_affine()).lengths()) == std::vector<std::size_t>{2, 2, 2});
  CHECK(sorted(cyclic_roots(fx::d5_affine()).lengths()) == std::vector<std::size_t>{2, 2, 3});
  CHECK(sorted(cyclic_roots(fx::e6_affine()).lengths()) == std::vector<std::size_t>{2, 3, 3});
  CHECK(sorted(cyclic_roots(fx::e7_affine()).lengths()) == std::vector<std::size_t>{2, 3, 4});
  CHECK(sorted(cyclic_roots(fx::e8_affine()).lengths()) == std::vector<std::size_t>{2, 3, 5});
  // A(1)_3 with two arrows each way: L = 2, N = (2,2)
  auto a3 = fx::make(4, {{0, 1}, {1, 2}, {0, 3}, {3, 2}});
  CHECK(sorted(cyclic_roots(a3).lengths()) == std::vector<std::size_t>{2, 2});
  // A(1)_3 with one arrow against three: L = 1, N = 3
  auto a31 = fx::make(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(cyclic_roots(a31).lengths() == std::vector<std::size_t>{3});
  CHECK_THROWS(cyclic_roots(fx::cyclic(3)));
  CHECK_THROWS(cyclic_roots(fx::kronecker()));
}

TEST_CASE("cyclic root table invariants and lattice checks") {
  for (const auto &q : {fx::a2_affine(), fx::d4_affine(), fx::d4_affine_out(), fx::d5_affine(),
                        fx::e6_affine(), fx::e7_affine(), fx::e8_affine()}) {
    auto t = cyclic_roots(q);
    auto rep = verify_lattice_presentation(q, t);
    CHECK_MESSAGE(rep.ok(), rep.to_json().dump());
  }
  auto d4 = fx::d4_affine_out();
  auto t = cyclic_roots(d4);
  CHECK(t.p_sink);
  auto pres = verify_lattice_presentation(d4, t);
  CHECK(pres.data["generator_count"] == 8);
  CHECK(pres.data["rank"] == 5);
  auto nu = nu_isometry_check(d4, t);
  CHECK_MESSAGE(nu.ok(), nu.to_json().dump());
  CHECK(nu.data["pairs_checked"] == 16);
  CHECK(nu.data["q_hat_class"] == "FiniteIrreducible(D_4)");
  // extending vertices of this orientation are sources
  CHECK_THROWS(nu_isometry_check(fx::d4_affine(), cyclic_roots(fx::d4_affine())));
  auto a = fx::a2_affine();
  auto ta = cyclic_roots(a);
  CHECK(verify_lattice_presentation(a, ta).data["rank"] == 3);
  CHECK(nu_isometry_check(a, ta).ok());
  auto e6 = fx::make(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  auto te = cyclic_roots(e6);
  auto nue = nu_isometry_check(e6, te);
  CHECK_MESSAGE(nue.ok(), nue.to_json().dump());
}
