#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "qh/check.hpp"
#include "qh/field.hpp"
#include "qh/roots.hpp"

namespace qh {

enum class Cocycle { Euler, Twisted };

// Element of one graded piece, in the canonical basis of that grade.
// Real grades have one coordinate; imaginary grades n*delta store h mod delta
// with the coordinate at the first extending vertex removed.
struct LieElement {
  DimVector grade;
  std::vector<Rational> c;

  bool is_zero() const {
    for (const auto &x : c)
      if (x != 0)
        return false;
    return true;
  }
  friend bool operator==(const LieElement &, const LieElement &) = default;
};

struct CapOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class EpsAlgebra {
public:
  EpsAlgebra(const Quiver &q, Cocycle variant, int cap);

  const Quiver &quiver() const { return q_; }
  Cocycle variant() const { return variant_; }
  bool affine() const { return affine_; }
  int cap() const { return cap_; }
  const DimVector &delta() const { return delta_; }
  // index of the vertex whose coordinate is dropped at imaginary grades
  std::size_t pinned() const { return pin_; }

  const std::vector<DimVector> &grades() const { return grades_; }
  bool has_grade(const DimVector &g) const { return index_.count(g) > 0; }
  bool imaginary(const DimVector &g) const;
  long long imaginary_degree(const DimVector &g) const; // n with g = n delta, else 0
  std::size_t dim(const DimVector &g) const;
  std::size_t total_dim() const;
  bool is_root(const DimVector &g) const;

  int xi(const DimVector &a) const;
  int eps(const DimVector &a, const DimVector &b) const;

  LieElement zero(const DimVector &g) const;
  LieElement basis(const DimVector &g, std::size_t k) const;
  LieElement simple(std::size_t i) const;
  // h(n) for an integer or rational vector h in Q^I, reduced modulo delta
  LieElement imaginary_class(const std::vector<Rational> &h, long long n) const;
  std::vector<Rational> lift(const LieElement &x) const; // h in Q^I with pinned coordinate 0

  LieElement bracket(const LieElement &x, const LieElement &y) const;
  LieElement add(const LieElement &x, const LieElement &y) const;
  LieElement scaled(const Rational &k, const LieElement &x) const;

  std::string symbol(const DimVector &g, std::size_t k) const;
  std::string describe(const LieElement &x) const;

private:
  LieElement bracket_basis(const DimVector &a, std::size_t ka, const DimVector &b, std::size_t kb) const;

  Quiver q_;
  Cocycle variant_;
  bool affine_ = false;
  int cap_ = 0;
  DimVector delta_;
  std::size_t pin_ = 0;
  std::vector<DimVector> grades_;
  std::map<DimVector, std::size_t> index_;
};

CheckReport verify_serre(const EpsAlgebra &g);
CheckReport verify_jacobi(const EpsAlgebra &g);
CheckReport twist_compare(const EpsAlgebra &euler, const EpsAlgebra &twisted);
CheckReport integral_form_check(const EpsAlgebra &g);
Json structure_table(const EpsAlgebra &g);

// Cyclic quiver helpers: alpha_{i,l} and the rebased bracket check.
DimVector cyclic_root(std::size_t N, long long i, long long l);
CheckReport cyclic_rebasing_check(const EpsAlgebra &g);
// The map C_2 -> K of the A(1)_1 comparison, checked on in-cap bases.
CheckReport eta_check(const EpsAlgebra &c2, const EpsAlgebra &k);

} // namespace qh
