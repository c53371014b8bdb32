#include "qh/lattice.hpp"

#include <stdexcept>

#include "qh/matrix.hpp"

namespace qh {

namespace {

Integer floor_div(const Integer &a, const Integer &b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

void row_axpy(std::vector<Integer> &dst, const Integer &k, const std::vector<Integer> &src) {
  for (std::size_t j = 0; j < dst.size(); ++j)
    dst[j] -= k * src[j];
}

bool is_zero_row(const std::vector<Integer> &r) {
  for (const auto &v : r)
    if (v != 0)
      return false;
  return true;
}

} // namespace

SmithForm smith_normal_form(IntMatrix m) {
  SmithForm out;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero entry in the trailing block
    bool found = false;
    std::size_t pi = t, pj = t;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (m[i][j] != 0 && (!found || abs(m[i][j]) < abs(m[pi][pj]))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found)
      break;
    std::swap(m[t], m[pi]);
    for (auto &row : m)
      std::swap(row[t], row[pj]);
    bool clean = true;
    for (std::size_t i = t + 1; i < rows; ++i) {
      if (m[i][t] == 0)
        continue;
      Integer q = floor_div(m[i][t], m[t][t]);
      row_axpy(m[i], q, m[t]);
      if (m[i][t] != 0)
        clean = false;
    }
    for (std::size_t j = t + 1; j < cols; ++j) {
      if (m[t][j] == 0)
        continue;
      Integer q = floor_div(m[t][j], m[t][t]);
      for (std::size_t i = 0; i < rows; ++i)
        m[i][j] -= q * m[i][t];
      if (m[t][j] != 0)
        clean = false;
    }
    if (!clean)
      continue;
    // divisibility condition on the trailing block
    bool divides = true;
    for (std::size_t i = t + 1; i < rows && divides; ++i)
      for (std::size_t j = t + 1; j < cols; ++j)
        if (m[i][j] % m[t][t] != 0) {
          for (std::size_t k = 0; k < cols; ++k)
            m[t][k] += m[i][k];
          divides = false;
          break;
        }
    if (!divides)
      continue;
    out.diagonal.push_back(abs(m[t][t]));
    ++t;
  }
  out.rank = out.diagonal.size();
  return out;
}

IntMatrix hermite_basis(IntMatrix rows) {
  if (rows.empty())
    return rows;
  std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    bool have = false;
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c])))
          best = i;
      if (best == rows.size())
        break;
      have = true;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0)
          continue;
        row_axpy(rows[i], floor_div(rows[i][c], rows[r][c]), rows[r]);
        if (rows[i][c] != 0)
          done = false;
      }
      if (done)
        break;
    }
    if (!have)
      continue;
    if (rows[r][c] < 0)
      for (auto &v : rows[r])
        v = -v;
    for (std::size_t i = 0; i < r; ++i)
      if (rows[i][c] != 0)
        row_axpy(rows[i], floor_div(rows[i][c], rows[r][c]), rows[r]);
    ++r;
  }
  IntMatrix out;
  for (auto &row : rows)
    if (!is_zero_row(row))
      out.push_back(row);
  return out;
}

namespace {

std::size_t pivot_col(const std::vector<Integer> &row) {
  for (std::size_t j = 0; j < row.size(); ++j)
    if (row[j] != 0)
      return j;
  return row.size();
}

// Coordinates of v in the echelon basis h; false if v is not in the lattice.
bool reduce(const IntMatrix &h, std::vector<Integer> v, std::vector<Integer> *coords) {
  if (coords)
    coords->assign(h.size(), 0);
  for (std::size_t k = 0; k < h.size(); ++k) {
    std::size_t c = pivot_col(h[k]);
    if (v[c] % h[k][c] != 0)
      return false;
    Integer q = v[c] / h[k][c];
    if (coords)
      (*coords)[k] = q;
    row_axpy(v, q, h[k]);
  }
  return is_zero_row(v);
}

} // namespace

bool in_lattice(const IntMatrix &rows, const std::vector<Integer> &v) {
  if (rows.empty())
    return is_zero_row(v);
  return reduce(hermite_basis(rows), v, nullptr);
}

Integer lattice_index(const IntMatrix &sub, const IntMatrix &full) {
  IntMatrix hs = hermite_basis(sub);
  IntMatrix hf = hermite_basis(full);
  if (hs.size() != hf.size())
    return 0;
  if (hs.empty())
    return 1;
  IntMatrix coords;
  for (const auto &row : hs) {
    std::vector<Integer> c;
    if (!reduce(hf, row, &c))
      throw std::invalid_argument("lattice_index: sublattice not contained in lattice");
    coords.push_back(c);
  }
  SmithForm s = smith_normal_form(coords);
  if (s.rank != coords.size())
    return 0;
  Integer det = 1;
  for (const auto &d : s.diagonal)
    det *= d;
  return det;
}

Definiteness definiteness(const std::vector<std::vector<long long>> &m) {
  std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      a[i][j] = Rational(static_cast<long>(m[i][j]));
  bool semi = false;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] < 0)
      return Definiteness::Indefinite;
    if (a[k][k] == 0) {
      for (std::size_t i = k + 1; i < n; ++i)
        if (a[i][k] != 0)
          return Definiteness::Indefinite;
      semi = true;
      continue;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0)
        continue;
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j)
        a[i][j] -= f * a[k][j];
    }
  }
  return semi ? Definiteness::PositiveSemidefinite : Definiteness::PositiveDefinite;
}

std::vector<std::vector<Integer>> integer_kernel(const std::vector<std::vector<long long>> &m) {
  RationalField f;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  FMat<RationalField> a = zeros(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      a(i, j) = f.from_int(m[i][j]);
  auto k = nullspace(f, a);
  std::vector<std::vector<Integer>> out;
  for (std::size_t t = 0; t < k.cols; ++t) {
    Integer l = 1;
    for (std::size_t i = 0; i < k.rows; ++i)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), k(i, t).get_den_mpz_t());
    std::vector<Integer> v(k.rows);
    Integer g = 0;
    for (std::size_t i = 0; i < k.rows; ++i) {
      Rational s = k(i, t) * l;
      v[i] = s.get_num();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[i].get_mpz_t());
    }
    if (g != 0)
      for (auto &x : v)
        x /= g;
    out.push_back(v);
  }
  return out;
}

} // namespace qh
