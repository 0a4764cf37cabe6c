#include "sl21/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace sl21 {

namespace {

std::vector<std::vector<Integer>> to_integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer den = 1;
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!is_zero(m(r, c))) den = lcm(den, m(r, c).get_den());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      if (!is_zero(q)) out[r][c] = q.get_num() * (den / q.get_den());
    }
  }
  return out;
}

}  // namespace

Echelon bareiss_echelon(const RationalMatrix& m) {
  auto a = to_integer_rows(m);
  const std::size_t nrows = a.size();
  const std::size_t ncols = m.cols();
  Echelon e;
  e.cols = ncols;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t best = nrows;
    for (std::size_t i = r; i < nrows; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      if (best == nrows || abs(a[i][c]) < abs(a[best][c])) best = i;
    }
    if (best == nrows) continue;
    std::swap(a[r], a[best]);
    const Integer& pivot = a[r][c];
    for (std::size_t i = r + 1; i < nrows; ++i) {
      Integer factor = a[i][c];
      if (sgn(factor) == 0) {
        // Entries still need the pivot/prev rescaling to keep later divisions exact.
        for (std::size_t j = c + 1; j < ncols; ++j) {
          if (sgn(a[i][j]) == 0) continue;
          a[i][j] = a[i][j] * pivot;
          mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
        }
        continue;
      }
      for (std::size_t j = c + 1; j < ncols; ++j) {
        Integer v = pivot * a[i][j] - factor * a[r][j];
        if (sgn(v) != 0) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a[i][j] = std::move(v);
      }
      a[i][c] = 0;
    }
    prev = pivot;
    e.pivot_cols.push_back(c);
    ++r;
  }
  a.resize(r);
  e.rows = std::move(a);
  return e;
}

std::size_t rank(const RationalMatrix& m) { return bareiss_echelon(m).pivot_cols.size(); }

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  const Echelon e = bareiss_echelon(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(n);
    x[free] = 1;
    for (std::size_t k = e.pivot_cols.size(); k-- > 0;) {
      const auto& row = e.rows[k];
      const std::size_t pc = e.pivot_cols[k];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < n; ++j)
        if (sgn(row[j]) != 0 && !is_zero(x[j])) s += Rational(row[j]) * x[j];
      x[pc] = -s / Rational(row[pc]);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<RationalVector> rref(const RationalMatrix& m) {
  const Echelon e = bareiss_echelon(m);
  const std::size_t n = m.cols();
  std::vector<RationalVector> rows;
  rows.reserve(e.rows.size());
  for (const auto& ir : e.rows) {
    RationalVector row(n);
    for (std::size_t j = 0; j < n; ++j) row[j] = Rational(ir[j]);
    rows.push_back(std::move(row));
  }
  for (std::size_t k = rows.size(); k-- > 0;) {
    const std::size_t pc = e.pivot_cols[k];
    const Rational inv = 1 / rows[k][pc];
    for (auto& v : rows[k]) v *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      const Rational f = rows[i][pc];
      if (is_zero(f)) continue;
      for (std::size_t j = pc; j < n; ++j) rows[i][j] -= f * rows[k][j];
    }
  }
  return rows;
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Gaussian elimination over the rationals; n is small wherever this is used.
  std::vector<RationalVector> a(n, RationalVector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a[p][c])) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (is_zero(a[i][c])) continue;
      const Rational f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return det;
}

}  // namespace sl21
