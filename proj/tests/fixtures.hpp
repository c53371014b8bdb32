#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qh/quiver.hpp"

namespace fx {

inline qh::Quiver make(std::size_t n, const std::vector<std::pair<int, int>> &edges) {
  std::vector<std::string> vs;
  for (std::size_t i = 0; i < n; ++i)
    vs.push_back(std::to_string(i));
  std::vector<qh::Edge> es;
  for (auto [a, b] : edges)
    es.push_back({std::to_string(a), std::to_string(b)});
  return qh::Quiver(vs, es);
}

inline qh::Quiver a2() { return make(2, {{0, 1}}); }
inline qh::Quiver a3() { return make(3, {{0, 1}, {1, 2}}); }
inline qh::Quiver d4() { return make(4, {{1, 0}, {2, 0}, {3, 0}}); }
inline qh::Quiver kronecker() { return make(2, {{0, 1}, {0, 1}}); }
inline qh::Quiver jordan() { return make(1, {{0, 0}}); }
inline qh::Quiver cyclic(int n) {
  std::vector<std::pair<int, int>> es;
  for (int i = 0; i < n; ++i)
    es.push_back({i, (i + 1) % n});
  return make(n, es);
}
// A(1)_2 with arrows 0->1, 1->2, 0->2.
inline qh::Quiver a2_affine() { return make(3, {{0, 1}, {1, 2}, {0, 2}}); }
// Affine D and E with every arm pointing towards the branch.
inline qh::Quiver d4_affine() { return make(5, {{1, 0}, {2, 0}, {3, 0}, {4, 0}}); }
// Affine D4 with the extending vertex 1 a sink.
inline qh::Quiver d4_affine_sink() { return make(5, {{0, 1}, {2, 0}, {3, 0}, {4, 0}}); }
inline qh::Quiver d5_affine() { return make(6, {{2, 0}, {3, 0}, {0, 1}, {4, 1}, {5, 1}}); }
inline qh::Quiver e6_affine() {
  return make(7, {{1, 0}, {2, 1}, {3, 0}, {4, 3}, {5, 0}, {6, 5}});
}
inline qh::Quiver e7_affine() {
  return make(8, {{1, 0}, {2, 0}, {3, 2}, {4, 3}, {5, 0}, {6, 5}, {7, 6}});
}
inline qh::Quiver e8_affine() {
  return make(9, {{1, 0}, {2, 0}, {3, 2}, {4, 0}, {5, 4}, {6, 5}, {7, 6}, {8, 7}});
}

// All orientations of a tree given by its undirected edges.
inline std::vector<qh::Quiver> orientations(std::size_t n, const std::vector<std::pair<int, int>> &edges) {
  std::vector<qh::Quiver> out;
  for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
    std::vector<std::pair<int, int>> es;
    for (std::size_t k = 0; k < edges.size(); ++k)
      es.push_back((mask >> k) & 1 ? std::pair{edges[k].second, edges[k].first} : edges[k]);
    out.push_back(make(n, es));
  }
  return out;
}

} // namespace fx

namespace fx {
inline qh::Quiver d4_affine_out() { return make(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}); }
} // namespace fx
