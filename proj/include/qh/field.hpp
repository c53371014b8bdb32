#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qh {

using Rational = mpq_class;
using Integer = mpz_class;

// Field selector carried by representations and reports; p == 0 means Q.
struct FieldSpec {
  std::uint32_t p = 0;

  bool is_rational() const { return p == 0; }
  std::string name() const {
    return p == 0 ? std::string("Q") : "F" + std::to_string(p);
  }
  friend bool operator==(const FieldSpec &, const FieldSpec &) = default;
};

bool is_prime(std::uint64_t n);
FieldSpec parse_field(const std::string &s);

class PrimeField {
public:
  using Elem = std::uint32_t;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  FieldSpec spec() const { return FieldSpec{p_}; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  bool is_one(Elem a) const { return a == 1; }
  Elem add(Elem a, Elem b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Elem inv(Elem a) const;
  Elem from_int(long long v) const {
    long long r = v % static_cast<long long>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }
  Elem from_rational(const Rational &r) const;
  Rational to_rational(Elem a) const { return Rational(static_cast<unsigned long>(a)); }
  std::string str(Elem a) const { return std::to_string(a); }
  bool equal(Elem a, Elem b) const { return a == b; }

private:
  std::uint32_t p_;
  std::vector<Elem> inverse_;
};

class RationalField {
public:
  using Elem = Rational;

  FieldSpec spec() const { return FieldSpec{0}; }
  Elem zero() const { return Rational(0); }
  Elem one() const { return Rational(1); }
  bool is_zero(const Elem &a) const { return sgn(a) == 0; }
  bool is_one(const Elem &a) const { return a == 1; }
  Elem add(const Elem &a, const Elem &b) const { return a + b; }
  Elem sub(const Elem &a, const Elem &b) const { return a - b; }
  Elem neg(const Elem &a) const { return -a; }
  Elem mul(const Elem &a, const Elem &b) const { return a * b; }
  Elem inv(const Elem &a) const {
    if (sgn(a) == 0)
      throw std::domain_error("inverse of zero");
    return 1 / a;
  }
  Elem from_int(long long v) const { return Rational(static_cast<long>(v)); }
  Elem from_rational(const Rational &r) const { return r; }
  Rational to_rational(const Elem &a) const { return a; }
  std::string str(const Elem &a) const { return a.get_str(); }
  bool equal(const Elem &a, const Elem &b) const { return a == b; }
};

std::string to_string(const Rational &r);
Rational parse_rational(const std::string &s);

} // namespace qh
