#pragma once

#include <vector>

#include "qh/field.hpp"

namespace qh {

using IntMatrix = std::vector<std::vector<Integer>>;

struct SmithForm {
  std::vector<Integer> diagonal; // nonzero invariant factors, ascending divisibility
  std::size_t rank = 0;
};

SmithForm smith_normal_form(IntMatrix m);

// Row-style Hermite normal form of the lattice spanned by the rows; zero rows dropped.
IntMatrix hermite_basis(IntMatrix rows);

// Index of the sublattice spanned by `sub` inside the lattice spanned by `full`
// (both full rank in the same ambient span); 0 when `sub` has smaller rank.
Integer lattice_index(const IntMatrix &sub, const IntMatrix &full);

// True when v is an integer combination of the rows.
bool in_lattice(const IntMatrix &rows, const std::vector<Integer> &v);

// Exact rational LDL test of a symmetric integer matrix.
enum class Definiteness { PositiveDefinite, PositiveSemidefinite, Indefinite };
Definiteness definiteness(const std::vector<std::vector<long long>> &m);

// Basis of the rational kernel of an integer matrix, scaled to primitive integer vectors.
std::vector<std::vector<Integer>> integer_kernel(const std::vector<std::vector<long long>> &m);

} // namespace qh
