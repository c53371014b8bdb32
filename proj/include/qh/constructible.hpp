#pragma once

#include <map>
#include <string>
#include <vector>

#include "qh/hall.hpp"

namespace qh {

// Function on isomorphism classes of one grade. Keys are label strings; the
// generic point of a tube family is "Tube(*,n)". Multiset keys ("A+B") carry
// values on decomposables when the function is used in full mode.
struct ConstructibleFn {
  DimVector grade;
  std::map<std::string, Rational> values;

  Rational at(const std::string &key) const;
  bool is_zero() const;
  void prune();
  Json to_json() const;

  friend bool operator==(const ConstructibleFn &, const ConstructibleFn &) = default;
};

ConstructibleFn indicator(const DimVector &grade, const std::string &key, const Rational &v = 1);
ConstructibleFn add(const ConstructibleFn &f, const ConstructibleFn &g);
ConstructibleFn scaled(const Rational &k, const ConstructibleFn &f);
ConstructibleFn sub(const ConstructibleFn &f, const ConstructibleFn &g);

// E_i: the indicator of the simple at vertex i.
ConstructibleFn generator(const HallEngine &e, std::size_t i);

// (f*g)(C) = sum f(A) g(B) chi(A,B;C), over indecomposable C or, in full
// mode, over every class of the grade (finite type).
ConstructibleFn star(HallEngine &e, const ConstructibleFn &f, const ConstructibleFn &g, bool full = false);
ConstructibleFn bracket(HallEngine &e, const ConstructibleFn &f, const ConstructibleFn &g, bool full = false);

// Values in the order of keys.
std::vector<Rational> coordinates(const ConstructibleFn &f, const std::vector<std::string> &keys);
ConstructibleFn from_coordinates(const DimVector &grade, const std::vector<std::string> &keys,
                                 const std::vector<Rational> &c);

} // namespace qh
