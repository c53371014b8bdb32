#include <doctest.h>

#include "fixtures.hpp"
#include "qh/lie_epsilon.hpp"

using namespace qh;

namespace {

int sign(long long n) { return n % 2 == 0 ? 1 : -1; }

LieElement kreal(const EpsAlgebra &g, long long a0, long long a1) { return g.basis({a0, a1}, 0); }
LieElement kalpha1(const EpsAlgebra &g, long long n) { return g.imaginary_class({0, 1}, n); }

} // namespace

TEST_CASE("A_2 bracket signs follow the Euler cocycle") {
  EpsAlgebra g(fx::a2(), Cocycle::Euler, 0);
  CHECK(g.total_dim() == 3);
  LieElement e01 = g.bracket(g.simple(0), g.simple(1));
  CHECK(e01.grade == DimVector{1, 1});
  CHECK(e01.c[0] == -1);
  CHECK(g.bracket(g.simple(1), g.simple(0)).c[0] == 1);
  CHECK(g.bracket(g.simple(0), e01).is_zero());
  CHECK(verify_serre(g).ok());
  CHECK(verify_jacobi(g).ok());
}

TEST_CASE("finite types: Jacobi and Serre hold exhaustively") {
  for (auto q : {fx::a3(), fx::d4(), fx::make(4, {{0, 1}, {2, 1}, {2, 3}})}) {
    EpsAlgebra g(q, Cocycle::Euler, 0);
    CHECK(verify_serre(g).ok());
    auto j = verify_jacobi(g);
    CHECK(j.ok());
    CHECK(j.data["triples_beyond_cap"] == 0);
  }
  EpsAlgebra d4(fx::d4(), Cocycle::Euler, 0);
  CHECK(d4.total_dim() == 12);
}

TEST_CASE("Kronecker brackets match the closed-form families") {
  const int cap = 3;
  EpsAlgebra g(fx::kronecker(), Cocycle::Euler, cap);
  CHECK(g.dim({1, 1}) == 1);
  CHECK(g.has_grade({4, 3}));
  CHECK_FALSE(g.has_grade({5, 4}));
  // Kronecker simples are alpha_0 = -alpha_1 modulo delta
  CHECK(g.imaginary_class({1, 0}, 1) == g.scaled(-1, kalpha1(g, 1)));
  for (long long n = 0; n <= cap; ++n)
    for (long long m = 0; m <= cap; ++m) {
      if (n + m + 1 <= cap) {
        CHECK(g.bracket(kreal(g, n, n + 1), kreal(g, m + 1, m)) ==
              g.scaled(sign(n + m), kalpha1(g, n + m + 1)));
      }
      if (n + m + 1 <= cap) {
        CHECK(g.bracket(kreal(g, n, n + 1), kreal(g, m, m + 1)).is_zero());
        CHECK(g.bracket(kreal(g, n + 1, n), kreal(g, m + 1, m)).is_zero());
      }
      if (n >= 1 && m + n <= cap) {
        CHECK(g.bracket(kalpha1(g, n), kreal(g, m, m + 1)) ==
              g.scaled(2 * sign(n), kreal(g, m + n, m + n + 1)));
        CHECK(g.bracket(kalpha1(g, n), kreal(g, m + 1, m)) ==
              g.scaled(-2 * sign(n), kreal(g, m + n + 1, m + n)));
      }
      if (n >= 1 && m >= 1 && n + m <= cap)
        CHECK(g.bracket(kalpha1(g, n), kalpha1(g, m)).is_zero());
    }
  CHECK(verify_jacobi(g).ok());
  CHECK(verify_serre(g).ok());
}

TEST_CASE("brackets beyond the cap raise CapOverflow") {
  EpsAlgebra g(fx::kronecker(), Cocycle::Euler, 1);
  CHECK_THROWS_AS(g.bracket(kalpha1(g, 1), kreal(g, 1, 2)), CapOverflow);
  CHECK_THROWS_AS(g.bracket(kreal(g, 1, 2), kreal(g, 1, 0)), CapOverflow);
  // non-roots give zero, not an overflow
  CHECK(g.bracket(kreal(g, 2, 1), kreal(g, 1, 0)).is_zero());
  CHECK_THROWS_AS(EpsAlgebra(fx::make(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}}), Cocycle::Euler, 1),
                  std::invalid_argument);
}

TEST_CASE("affine A(1)_2 and cyclic dimensions") {
  EpsAlgebra a(fx::a2_affine(), Cocycle::Euler, 2);
  CHECK(a.dim({1, 1, 1}) == 2);
  CHECK(a.dim({2, 2, 2}) == 2);
  CHECK(verify_jacobi(a).ok());
  CHECK(verify_serre(a).ok());
  EpsAlgebra c3(fx::cyclic(3), Cocycle::Euler, 2);
  CHECK(c3.dim({1, 1, 1}) == 2);
  CHECK(verify_jacobi(c3).ok());
  EpsAlgebra j(fx::jordan(), Cocycle::Euler, 3);
  CHECK(j.total_dim() == 0);
}

TEST_CASE("xi values and the twisted cocycle") {
  EpsAlgebra k(fx::kronecker(), Cocycle::Euler, 2);
  CHECK(k.xi({1, 0}) == 1);
  CHECK(k.xi({2, 3}) == 1);
  CHECK(k.xi({1, 1}) == 1);
  CHECK(k.xi({2, 2}) == -1);
  EpsAlgebra c2(fx::cyclic(2), Cocycle::Euler, 2);
  CHECK(c2.xi({1, 0}) == 1);
  CHECK(c2.xi({2, 1}) == -1);
  CHECK(c2.xi({3, 2}) == 1);
  for (auto q : {fx::kronecker(), fx::cyclic(2), fx::cyclic(3), fx::a2_affine()}) {
    EpsAlgebra e(q, Cocycle::Euler, 2), t(q, Cocycle::Twisted, 2);
    CHECK(twist_compare(e, t).ok());
    CHECK(verify_jacobi(t).ok());
  }
}

TEST_CASE("integral closure of the simple generators") {
  EpsAlgebra a(fx::a2_affine(), Cocycle::Euler, 2);
  auto r = integral_form_check(a);
  CHECK(r.ok());
  CHECK(r.data["generation_claimed"] == true);
  for (const auto &g : r.data["grades"])
    CHECK(g["index"] == "1");

  EpsAlgebra k(fx::kronecker(), Cocycle::Euler, 2);
  auto rk = integral_form_check(k);
  CHECK(rk.ok());
  CHECK(rk.data["generation_claimed"] == false);
  // [e_1, alpha_1(1)] = -2 e_(1,2), so the closure at (1,2) is 2Z; it then
  // propagates to (2,1) and (2,2).
  std::map<DimVector, std::string> frozen{{{1, 0}, "1"}, {{0, 1}, "1"}, {{1, 1}, "1"},
                                          {{1, 2}, "2"}, {{2, 1}, "2"}, {{2, 2}, "2"}};
  for (const auto &g : rk.data["grades"]) {
    DimVector gr = g["grade"].get<DimVector>();
    if (frozen.count(gr))
      CHECK_MESSAGE(g["index"] == frozen[gr], vec_str(gr));
  }
}

TEST_CASE("cyclic quivers: rebased brackets and the map to Kronecker") {
  for (int n : {2, 3, 4}) {
    EpsAlgebra c(fx::cyclic(n), Cocycle::Euler, 2);
    auto r = cyclic_rebasing_check(c);
    CHECK_MESSAGE(r.ok(), "C_" << n);
    CHECK(r.data["brackets_checked"].get<int>() > 0);
  }
  EpsAlgebra c2(fx::cyclic(2), Cocycle::Euler, 3), k(fx::kronecker(), Cocycle::Euler, 3);
  CHECK(eta_check(c2, k).ok());
  CHECK_THROWS_AS(cyclic_rebasing_check(EpsAlgebra(fx::kronecker(), Cocycle::Euler, 1)),
                  std::invalid_argument);
}

TEST_CASE("structure table lists basis and nonzero brackets") {
  EpsAlgebra g(fx::a2(), Cocycle::Euler, 0);
  Json t = structure_table(g);
  CHECK(t["basis"].size() == 3);
  CHECK(t["nonzero_brackets"].size() == 1);
  const Json &row = t["nonzero_brackets"][0];
  CHECK(row["x"] == "e(0,1)");
  CHECK(row["y"] == "e(1,0)");
  CHECK(row["bracket"]["e(1,1)"] == "1");
}
