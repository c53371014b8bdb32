#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "qh/lattice.hpp"
#include "qh/quiver.hpp"

using namespace qh;

TEST_CASE("classify names finite and affine shapes") {
  CHECK(classify(fx::a3()).describe() == "FiniteIrreducible(A_3)");
  CHECK(classify(fx::d4()).describe() == "FiniteIrreducible(D_4)");
  CHECK(classify(fx::kronecker()).describe() == "Affine(A(1)_1)+Kronecker");
  CHECK(classify(fx::cyclic(3)).describe() == "Affine(A(1)_2)+CyclicOrientation(C_3)");
  CHECK(classify(fx::cyclic(2)).describe() == "Affine(A(1)_1)+CyclicOrientation(C_2)");
  CHECK(classify(fx::a2_affine()).describe() == "Affine(A(1)_2)");
  CHECK(classify(fx::d4_affine()).type == "D(1)_4");
  CHECK(classify(fx::d5_affine()).type == "D(1)_5");
  CHECK(classify(fx::e6_affine()).type == "E(1)_6");
  CHECK(classify(fx::e7_affine()).type == "E(1)_7");
  CHECK(classify(fx::e8_affine()).type == "E(1)_8");
  CHECK(classify(fx::jordan()).kind == DynkinKind::Jordan);
  CHECK(classify(fx::make(3, {{0, 1}})).describe() == "FiniteReducible(A_2,A_1)");
  CHECK(classify(fx::make(6, {{1, 0}, {2, 0}, {3, 2}, {4, 0}, {5, 4}})).type == "E_6");
  CHECK(classify(fx::make(3, {{0, 1}, {0, 1}, {1, 2}})).kind == DynkinKind::Other);
  CHECK(classify(fx::make(2, {{0, 1}, {0, 1}, {0, 1}})).kind == DynkinKind::Other);
  CHECK_THROWS(classify(fx::make(2, {{0, 0}, {0, 1}})));
}

TEST_CASE("classification agrees with definiteness of the Cartan matrix") {
  for (const auto &q : {fx::a3(), fx::d4(), fx::kronecker(), fx::d4_affine(), fx::e8_affine(),
                        fx::make(3, {{0, 1}, {0, 1}, {1, 2}})}) {
    auto d = definiteness(cartan_matrix(q));
    auto c = classify(q);
    CHECK((d == Definiteness::PositiveDefinite) == c.finite());
    CHECK((d == Definiteness::PositiveSemidefinite) == c.affine());
  }
}

TEST_CASE("Euler form and cocycle") {
  auto a2 = fx::a2();
  CHECK(euler_form(a2, {1, 0}, {0, 1}) == -1);
  CHECK(euler_form(a2, {0, 1}, {1, 0}) == 0);
  auto k = fx::kronecker();
  CHECK(euler_form(k, {1, 0}, {0, 1}) == -2);
  CHECK(cartan_matrix(k)[0][1] == -2);
  auto j = fx::jordan();
  CHECK(euler_form(j, {3}, {5}) == 0);
  CHECK(euler_cocycle(j, {1}, {1}) == 1);
  CHECK(cartan_matrix(j)[0][0] == 0);
  auto d4 = fx::d4();
  for (std::size_t i = 0; i < 4; ++i)
    CHECK(euler_cocycle(d4, d4.simple(i), d4.simple(i)) == -1);
  CHECK(euler_cocycle(d4, d4.simple(1), d4.simple(0)) == -1);
  CHECK(euler_cocycle(d4, d4.simple(1), d4.simple(2)) == 1);
  CHECK_THROWS(euler_form(a2, {1}, {1, 0}));
}

TEST_CASE("symmetrized Euler form, bimultiplicativity and reflections") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (const auto &q : {fx::a3(), fx::kronecker(), fx::a2_affine(), fx::e6_affine()}) {
    auto cm = cartan_matrix(q);
    for (int trial = 0; trial < 50; ++trial) {
      DimVector a(q.size()), b(q.size()), c(q.size());
      for (auto *v : {&a, &b, &c})
        for (auto &x : *v)
          x = dist(rng);
      long long pair = 0;
      for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < q.size(); ++j)
          pair += a[i] * cm[i][j] * b[j];
      CHECK(euler_form(q, a, b) + euler_form(q, b, a) == pair);
      DimVector ac = a;
      for (std::size_t i = 0; i < q.size(); ++i)
        ac[i] += c[i];
      CHECK(euler_cocycle(q, ac, b) == euler_cocycle(q, a, b) * euler_cocycle(q, c, b));
      CHECK(euler_cocycle(q, b, ac) == euler_cocycle(q, b, a) * euler_cocycle(q, b, c));
      for (const auto &v : q.vertices()) {
        auto r = reflect(q, v, a);
        CHECK(reflect(q, v, r) == a);
        CHECK(cartan_pairing(q, r, reflect(q, v, b)) == cartan_pairing(q, a, b));
      }
    }
  }
  CHECK(reflect(fx::a2(), "1", {1, 1}) == DimVector{1, 0});
  CHECK(reflect(fx::kronecker(), "1", {1, 0}) == DimVector{1, 2});
  CHECK_THROWS(reflect(fx::a2(), "7", {1, 1}));
}

TEST_CASE("defect and imaginary root") {
  auto k = fx::kronecker();
  CHECK(first_imaginary_root(k) == DimVector{1, 1});
  CHECK(defect(k, {1, 0}) == 1);
  CHECK(defect(k, {0, 1}) == -1);
  CHECK(defect(k, {3, 3}) == 0);
  auto a = fx::a2_affine();
  long long s = 0;
  for (std::size_t i = 0; i < 3; ++i)
    s += defect(a, a.simple(i));
  CHECK(s == 0);
  CHECK(defect(a, {1, 0, 0}) == 1);
  CHECK(defect(a, {0, 1, 0}) == 0);
  CHECK(defect(a, {0, 0, 1}) == -1);
  CHECK_THROWS(defect(fx::a3(), {1, 0, 0}));
  auto d = first_imaginary_root(fx::d4_affine());
  CHECK(d == DimVector{2, 1, 1, 1, 1});
  CHECK(extending_vertices(fx::d4_affine()) == std::vector<std::string>{"1", "2", "3", "4"});
  CHECK(extending_vertices(fx::e8_affine()).size() == 1);
  auto e6 = first_imaginary_root(fx::e6_affine());
  std::sort(e6.begin(), e6.end());
  CHECK(e6 == DimVector{1, 1, 1, 2, 2, 2, 3});
}

TEST_CASE("admissible vertices and Coxeter elements") {
  auto a2 = fx::a2();
  CHECK(coxeter_element(a2) == WeylWord{"0", "1"});
  auto r = reflect_quiver(a2, "1");
  CHECK(r.edges()[0].out == "1");
  CHECK(r.edges()[0].in == "0");
  CHECK(reflect_quiver(r, "1") == a2);
  CHECK_THROWS(reflect_quiver(fx::a3(), "1"));
  CHECK_THROWS(coxeter_element(fx::cyclic(3)));
  CHECK_FALSE(is_admissible(fx::cyclic(3), "0"));
  for (const auto &q : {fx::a3(), fx::d4(), fx::a2_affine(), fx::d5_affine(), fx::e7_affine()}) {
    auto w = coxeter_element(q);
    Quiver cur = q;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      CHECK(is_admissible(cur, *it));
      cur = reflect_quiver(cur, *it);
    }
    CHECK(cur == q);
  }
  // c acts as the Auslander-Reiten translate on dimension vectors: c(e_0) = e_1 on A_2.
  CHECK(coxeter_transform(a2, {1, 0}) == DimVector{0, 1});
}

TEST_CASE("quiver json round trip") {
  auto q = parse_quiver(R"({"vertices":["a","b"],"edges":[{"out":"a","in":"b"}]})");
  CHECK(q.size() == 2);
  CHECK(parse_quiver(quiver_to_json(q)) == q);
  CHECK_THROWS(parse_quiver(R"({"vertices":["a"],"edges":[{"out":"a","in":"z"}]})"));
}

TEST_CASE("Smith and Hermite forms") {
  IntMatrix m = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  auto s = smith_normal_form(m);
  REQUIRE(s.rank == 3);
  CHECK(s.diagonal[0] == 2);
  CHECK(s.diagonal[1] == 6);
  CHECK(s.diagonal[2] == 12);
  IntMatrix full = {{1, 0}, {0, 1}};
  IntMatrix sub = {{2, 0}, {1, 1}};
  CHECK(lattice_index(sub, full) == 2);
  CHECK(in_lattice(sub, {3, 1}));
  CHECK_FALSE(in_lattice(sub, {0, 1}));
  CHECK_FALSE(in_lattice(sub, {1, 0}));
}
