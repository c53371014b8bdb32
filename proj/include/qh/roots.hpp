#pragma once

#include <string>
#include <vector>

#include "qh/check.hpp"
#include "qh/quiver.hpp"

namespace qh {

enum class RootKind { Real, Imaginary };

struct Root {
  DimVector vector;
  RootKind kind = RootKind::Real;
  long long defect = 0;

  bool real() const { return kind == RootKind::Real; }
};

bool dominated(const DimVector &a, const DimVector &b); // a <= b coordinatewise
bool is_nonnegative(const DimVector &a);
DimVector add(const DimVector &a, const DimVector &b);
DimVector sub(const DimVector &a, const DimVector &b);
DimVector scale(long long k, const DimVector &a);
long long height(const DimVector &a);
std::string vec_str(const DimVector &a);

// Finite type: every positive root, ordered by height then lexicographically.
std::vector<Root> positive_roots(const Quiver &q);

// Affine type: positive roots bounded by n*delta, same ordering.
std::vector<Root> roots_up_to(const Quiver &q, int n);

// Largest k with a - k*delta >= 0.
long long delta_multiple(const DimVector &a, const DimVector &delta);

struct CyclicRootTable {
  DimVector delta;
  std::string p;     // chosen extending vertex
  bool p_sink = false;
  DimVector alpha0;  // delta - p
  std::vector<std::vector<DimVector>> orbits; // orbits[i][j] = alpha_{i,j}
  std::vector<std::size_t> n_index;           // j with (alpha_{i,j})_p = 1

  std::size_t L() const { return orbits.size(); }
  std::vector<std::size_t> lengths() const;
  Json to_json(const Quiver &q) const;
};

CyclicRootTable cyclic_roots(const Quiver &q);
CheckReport verify_lattice_presentation(const Quiver &q, const CyclicRootTable &t);
CheckReport nu_isometry_check(const Quiver &q, const CyclicRootTable &t);

// The chain-star quiver built from a table, with vertex ids "a<i>_<j>" and "spade".
Quiver star_of_chains(const CyclicRootTable &t);

} // namespace qh
