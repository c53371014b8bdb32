#pragma once

#include <map>
#include <string>
#include <vector>

#include "qh/check.hpp"
#include "qh/constructible.hpp"
#include "qh/lie_epsilon.hpp"

namespace qh {

// Graded basis of the Lie algebra generated by the E_i under the function
// bracket, one grade per root inside the cap.
struct NStar {
  std::vector<DimVector> grades; // height order
  std::map<DimVector, std::vector<std::string>> keys;
  std::map<DimVector, std::vector<ConstructibleFn>> basis;
  std::map<DimVector, std::vector<std::string>> paths;

  std::size_t dim(const DimVector &g) const;
  Json to_json() const;
};

// Root grades of the family, in height order. For affine families the cap is
// a multiple of delta; finite families ignore it.
std::vector<DimVector> nstar_grades(const HallEngine &e, int cap);

NStar generate_nstar(HallEngine &e, int cap);

// (ad E_i)^{1 - a_ij} E_j = 0 for all i != j. Finite families are checked on
// every class, affine families on indecomposables.
CheckReport serre_check(HallEngine &e);

// [E_a, E_b] = eps(a,b) E_{a+b} (or 0), finite type only. Pairs whose sum has
// height at most full_height are compared on every class, the rest on
// indecomposables.
CheckReport finite_corollary_check(HallEngine &e, long long full_height = 4);

// Builds Xi on n^eps by brackets with the generators and compares it with
// the closed formulas of the family.
CheckReport xi_check(HallEngine &e, int cap, Cocycle variant = Cocycle::Euler);

struct MuValue {
  std::string point;
  Rational value;
};
struct MuReport {
  long long n = 0;
  std::vector<MuValue> values;
  bool constant = true;
  Json to_json() const;
};
MuReport mu_pushforward(const HallEngine &e, const ConstructibleFn &f);
CheckReport mu_check(HallEngine &e, int cap);

// E_tilde_{i,j}(n) - E_tilde_{i,j+1}(n) and E_tilde_0(n) (affine A) or the
// theorem images at n delta for Kronecker and cyclic quivers.
std::vector<ConstructibleFn> imaginary_generators(const HallEngine &e, long long n);

CheckReport integral_nstar_check(HallEngine &e, int cap);
CheckReport kproducts_check(HallEngine &e, int nmax);
CheckReport cnproduct_check(HallEngine &e, int max_len);
CheckReport riedtmann_check(HallEngine &e, std::size_t pairs, std::uint32_t seed = 1);
CheckReport associativity_check(HallEngine &e, long long max_height);
CheckReport held_out_check(const HallEngine &e);

} // namespace qh
