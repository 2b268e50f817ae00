#include "bia/exact_linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "bia/errors.hpp"

namespace bia {

namespace {

// Clears denominators row by row; row scaling preserves rank.
std::vector<std::vector<Int>> to_integer_rows(const std::vector<std::vector<Rat>>& vectors) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    Int lcm = 1;
    for (const auto& q : v) {
      Int den = q.get_den();
      Int g;
      mpz_gcd(g.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
      lcm = lcm / g * den;
    }
    std::vector<Int> row;
    row.reserve(v.size());
    for (const auto& q : v) {
      row.push_back(q.get_num() * (lcm / q.get_den()));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

int rank_exact(const std::vector<std::vector<Rat>>& vectors) {
  if (vectors.empty()) return 0;
  auto rows = to_integer_rows(vectors);
  const size_t m = rows.size();
  const size_t n = rows[0].size();
  for (const auto& r : rows) {
    if (r.size() != n) throw Error(ErrorKind::DimensionMismatch, "ragged vector list");
  }
  // Fraction-free (Bareiss) elimination.
  Int prev = 1;
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < m; ++col) {
    size_t piv = rank;
    while (piv < m && rows[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t i = rank + 1; i < m; ++i) {
      for (size_t j = col + 1; j < n; ++j) {
        Int t = rows[rank][col] * rows[i][j] - rows[i][col] * rows[rank][j];
        mpz_divexact(rows[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      rows[i][col] = 0;
    }
    prev = rows[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

int rank_float(const std::vector<std::vector<double>>& vectors, double rel_threshold) {
  if (vectors.empty()) return 0;
  auto rows = vectors;
  const size_t m = rows.size();
  const size_t n = rows[0].size();
  double max_abs = 0.0;
  for (const auto& r : rows)
    for (double x : r) max_abs = std::max(max_abs, std::fabs(x));
  if (max_abs == 0.0) return 0;
  const double tol = rel_threshold * max_abs;
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < m; ++col) {
    size_t piv = rank;
    for (size_t i = rank + 1; i < m; ++i)
      if (std::fabs(rows[i][col]) > std::fabs(rows[piv][col])) piv = i;
    if (std::fabs(rows[piv][col]) <= tol) continue;
    std::swap(rows[rank], rows[piv]);
    for (size_t i = rank + 1; i < m; ++i) {
      const double f = rows[i][col] / rows[rank][col];
      rows[i][col] = 0.0;
      for (size_t j = col + 1; j < n; ++j) rows[i][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

ExactSolve solve_columns_exact(const std::vector<std::vector<Rat>>& columns,
                               const std::vector<Rat>& rhs) {
  ExactSolve out;
  const size_t ncols = columns.size();
  const size_t nslots = rhs.size();
  for (const auto& c : columns) {
    if (c.size() != nslots) throw Error(ErrorKind::DimensionMismatch, "column length != rhs length");
  }
  // Augmented system [columns | rhs] as equations over slots.
  std::vector<std::vector<Rat>> a(nslots, std::vector<Rat>(ncols + 1));
  for (size_t i = 0; i < nslots; ++i) {
    for (size_t c = 0; c < ncols; ++c) a[i][c] = columns[c][i];
    a[i][ncols] = rhs[i];
  }
  std::vector<long long> pivot_col_of_row;
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < nslots; ++col) {
    size_t piv = row;
    while (piv < nslots && a[piv][col] == 0) ++piv;
    if (piv == nslots) continue;
    std::swap(a[row], a[piv]);
    const Rat pv = a[row][col];
    for (size_t j = col; j <= ncols; ++j) a[row][j] /= pv;
    for (size_t i = 0; i < nslots; ++i) {
      if (i == row || a[i][col] == 0) continue;
      const Rat f = a[i][col];
      for (size_t j = col; j <= ncols; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_col_of_row.push_back(static_cast<long long>(col));
    ++row;
  }
  out.column_rank = static_cast<int>(row);
  out.consistent = true;
  for (size_t i = row; i < nslots; ++i) {
    if (a[i][ncols] != 0) {
      out.consistent = false;
      break;
    }
  }
  out.unique = (out.column_rank == static_cast<int>(ncols));
  if (out.consistent && out.unique) {
    out.solution.assign(ncols, Rat(0));
    for (size_t i = 0; i < pivot_col_of_row.size(); ++i) {
      out.solution[pivot_col_of_row[i]] = a[i][ncols];
    }
  }
  return out;
}

std::vector<double> solve_columns_float(const std::vector<std::vector<double>>& columns,
                                        const std::vector<double>& rhs) {
  const size_t ncols = columns.size();
  const size_t nslots = rhs.size();
  // Normal equations G z = b with G = A^T A.
  std::vector<std::vector<double>> g(ncols, std::vector<double>(ncols + 1, 0.0));
  for (size_t i = 0; i < ncols; ++i) {
    for (size_t j = 0; j < ncols; ++j) {
      double s = 0.0;
      for (size_t t = 0; t < nslots; ++t) s += columns[i][t] * columns[j][t];
      g[i][j] = s;
    }
    double s = 0.0;
    for (size_t t = 0; t < nslots; ++t) s += columns[i][t] * rhs[t];
    g[i][ncols] = s;
  }
  for (size_t col = 0; col < ncols; ++col) {
    size_t piv = col;
    for (size_t i = col + 1; i < ncols; ++i)
      if (std::fabs(g[i][col]) > std::fabs(g[piv][col])) piv = i;
    std::swap(g[col], g[piv]);
    if (g[col][col] == 0.0) throw Error(ErrorKind::Decodability, "singular normal equations");
    for (size_t i = 0; i < ncols; ++i) {
      if (i == col) continue;
      const double f = g[i][col] / g[col][col];
      for (size_t j = col; j <= ncols; ++j) g[i][j] -= f * g[col][j];
    }
  }
  std::vector<double> z(ncols);
  for (size_t i = 0; i < ncols; ++i) z[i] = g[i][ncols] / g[i][i];
  return z;
}

}  // namespace bia
