#include "qh/functors.hpp"

namespace qh {

Point Point::make(const Rational &a, const Rational &b) {
  if (sgn(a) == 0 && sgn(b) == 0)
    throw std::invalid_argument("(0:0) is not a point");
  if (sgn(a) == 0)
    return Point{0, 1};
  Rational t = b / a;
  return Point{1, t};
}

Point Point::parse(const std::string &s) {
  auto colon = s.find(':');
  if (s.size() < 5 || s.front() != '(' || s.back() != ')' || colon == std::string::npos)
    throw std::invalid_argument("bad projective point '" + s + "'");
  return make(parse_rational(s.substr(1, colon - 1)), parse_rational(s.substr(colon + 1, s.size() - colon - 2)));
}

std::string Point::str() const { return "(" + to_string(a) + ":" + to_string(b) + ")"; }

std::vector<Point> projective_line(std::uint32_t p) {
  std::vector<Point> out;
  for (std::uint32_t t = 0; t < p; ++t)
    out.push_back(Point{1, Rational(static_cast<unsigned long>(t))});
  out.push_back(Point{0, 1});
  return out;
}

namespace {

template <class F> FMat<F> pencil(const F &f, const FMat<F> &xa, const FMat<F> &xb, const Point &z) {
  auto a = f.from_rational(z.a), b = f.from_rational(z.b);
  FMat<F> m = zeros(f, xa.rows, xa.cols);
  for (std::size_t k = 0; k < m.a.size(); ++k)
    m.a[k] = f.add(f.mul(a, xa.a[k]), f.mul(b, xb.a[k]));
  return m;
}

void require_square(const std::size_t r, const std::size_t c) {
  if (r != c)
    throw std::invalid_argument("spectrum needs square dimensions");
}

} // namespace

std::vector<Point> kronecker_spec(const PrimeField &f, const FMat<PrimeField> &xa, const FMat<PrimeField> &xb) {
  require_square(xa.rows, xa.cols);
  std::vector<Point> out;
  for (const auto &z : projective_line(f.modulus()))
    if (!is_invertible(f, pencil(f, xa, xb, z)))
      out.push_back(z);
  return out;
}

std::vector<Point> kronecker_spec(const RationalField &f, const FMat<RationalField> &xa,
                                  const FMat<RationalField> &xb) {
  require_square(xa.rows, xa.cols);
  std::size_t n = xa.rows;
  std::vector<Point> out;
  if (n == 0)
    return out;
  // p(t) = det(x_a + t x_b) from n+1 samples; Newton form gives the two top coefficients
  std::vector<Rational> ts, vs;
  for (std::size_t k = 0; k <= n; ++k) {
    ts.emplace_back(static_cast<long>(k));
    vs.push_back(determinant(f, pencil(f, xa, xb, Point{1, ts.back()})));
  }
  std::vector<Rational> coef(n + 1, Rational(0));
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<Rational> basis{Rational(1)};
    Rational denom = 1;
    for (std::size_t m = 0; m <= n; ++m) {
      if (m == k)
        continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t d = 0; d < basis.size(); ++d) {
        next[d + 1] += basis[d];
        next[d] -= basis[d] * ts[m];
      }
      basis = next;
      denom *= ts[k] - ts[m];
    }
    for (std::size_t d = 0; d <= n; ++d)
      coef[d] += vs[k] * basis[d] / denom;
  }
  auto eval = [&](const Rational &t) {
    Rational s = 0;
    for (std::size_t d = n + 1; d-- > 0;)
      s = s * t + coef[d];
    return s;
  };
  std::size_t deg = n;
  while (deg > 0 && sgn(coef[deg]) == 0)
    --deg;
  if (deg < n || sgn(coef[n]) == 0)
    out.push_back(Point{0, 1});
  if (deg > 0) {
    Rational t0 = -coef[deg - 1] / (Rational(static_cast<long>(deg)) * coef[deg]);
    if (sgn(eval(t0)) == 0)
      out.insert(out.begin(), Point{1, t0});
  }
  return out;
}

} // namespace qh
