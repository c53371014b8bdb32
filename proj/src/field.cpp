#include "qh/field.hpp"

namespace qh {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

FieldSpec parse_field(const std::string &s) {
  if (s == "Q" || s == "QQ" || s == "0")
    return FieldSpec{0};
  std::string digits = s;
  if (!digits.empty() && (digits[0] == 'F' || digits[0] == 'p'))
    digits = digits.substr(1);
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(digits, &used);
  } catch (const std::exception &) {
    throw std::invalid_argument("bad field spec: " + s);
  }
  if (used != digits.size() || !is_prime(v) || v > 65521)
    throw std::invalid_argument("field must be Q or a prime below 65536: " + s);
  return FieldSpec{static_cast<std::uint32_t>(v)};
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p) || p > 65521)
    throw std::invalid_argument("PrimeField: modulus must be a prime below 65536");
  if (p <= 4096) {
    inverse_.assign(p, 0);
    for (std::uint32_t a = 1; a < p; ++a) {
      if (inverse_[a])
        continue;
      // Fermat inverse, filled pairwise
      std::uint64_t r = 1, b = a, e = p - 2;
      while (e) {
        if (e & 1)
          r = r * b % p;
        b = b * b % p;
        e >>= 1;
      }
      inverse_[a] = static_cast<Elem>(r);
      inverse_[r] = a;
    }
  }
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0)
    throw std::domain_error("inverse of zero");
  if (!inverse_.empty())
    return inverse_[a];
  std::uint64_t r = 1, b = a, e = p_ - 2;
  while (e) {
    if (e & 1)
      r = r * b % p_;
    b = b * b % p_;
    e >>= 1;
  }
  return static_cast<Elem>(r);
}

PrimeField::Elem PrimeField::from_rational(const Rational &r) const {
  mpz_class num = r.get_num() % p_;
  mpz_class den = r.get_den() % p_;
  if (den == 0)
    throw std::domain_error("denominator vanishes modulo " + std::to_string(p_));
  long n = num.get_si();
  long d = den.get_si();
  return mul(from_int(n), inv(from_int(d)));
}

std::string to_string(const Rational &r) { return r.get_str(); }

Rational parse_rational(const std::string &s) {
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational: " + s);
  r.canonicalize();
  return r;
}

} // namespace qh
