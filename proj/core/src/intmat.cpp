#include "blocklie/intmat.hpp"

#include <stdexcept>
#include <utility>

namespace blocklie {

namespace {

void axpy_row(IntVec& dst, const IntVec& src, const Integer& q) {
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] -= q * src[k];
}

bool is_zero_row(const IntVec& r) {
  for (const auto& x : r) {
    if (x != 0) return false;
  }
  return true;
}

// Echelon reduction in place; returns pivot columns. `tail` rows are
// transformed alongside (same row operations) when non-null.
std::vector<std::size_t> echelonize(IntMat& rows, IntMat* tail, std::size_t n_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t col = 0; col < n_cols && r < rows.size(); ++col) {
    for (;;) {
      std::size_t best = rows.size();
      std::size_t nonzero = 0;
      for (std::size_t i = r; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        ++nonzero;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (nonzero == 0) break;
      if (best != r) {
        std::swap(rows[best], rows[r]);
        if (tail) std::swap((*tail)[best], (*tail)[r]);
      }
      if (nonzero == 1) break;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
        axpy_row(rows[i], rows[r], q);
        if (tail) axpy_row((*tail)[i], (*tail)[r], q);
      }
    }
    if (rows[r][col] == 0) continue;
    if (rows[r][col] < 0) {
      for (auto& x : rows[r]) x = -x;
      if (tail) {
        for (auto& x : (*tail)[r]) x = -x;
      }
    }
    pivots.push_back(col);
    ++r;
  }
  return pivots;
}

}  // namespace

IntMat echelon_form(IntMat rows) {
  if (rows.empty()) return rows;
  const std::size_t n_cols = rows[0].size();
  auto pivots = echelonize(rows, nullptr, n_cols);
  rows.resize(pivots.size());
  return rows;
}

IntMat hermite_normal_form(IntMat rows) {
  if (rows.empty()) return rows;
  const std::size_t n_cols = rows[0].size();
  auto pivots = echelonize(rows, nullptr, n_cols);
  rows.resize(pivots.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const std::size_t col = pivots[r];
    for (std::size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[r][col].get_mpz_t());
      if (q != 0) axpy_row(rows[i], rows[r], q);
    }
  }
  return rows;
}

std::size_t integer_rank(const IntMat& rows) { return echelon_form(rows).size(); }

IntMat identity_matrix(std::size_t n) {
  IntMat m(n, IntVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMat left_kernel(const IntMat& a, std::size_t n_rows) {
  IntMat rows = a;
  IntMat tail = identity_matrix(n_rows);
  const std::size_t n_cols = a.empty() ? 0 : a[0].size();
  auto pivots = echelonize(rows, &tail, n_cols);
  IntMat kernel;
  for (std::size_t i = pivots.size(); i < n_rows; ++i) {
    if (is_zero_row(rows[i]) && !is_zero_row(tail[i])) kernel.push_back(tail[i]);
  }
  return hermite_normal_form(std::move(kernel));
}

std::optional<RatVec> solve_left(const IntMat& b, const IntVec& t) {
  // Unknowns c_0..c_{r-1}; equations sum_i c_i b[i][k] = t[k] for each column k.
  const std::size_t r = b.size();
  const std::size_t n = t.size();
  std::vector<RatVec> eq(n, RatVec(r + 1));
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < r; ++i) eq[k][i] = b[i][k];
    eq[k][r] = t[k];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < r && row < n; ++col) {
    std::size_t p = row;
    while (p < n && eq[p][col] == 0) ++p;
    if (p == n) continue;
    std::swap(eq[p], eq[row]);
    const Rational inv = 1 / eq[row][col];
    for (auto& x : eq[row]) x *= inv;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == row || eq[k][col] == 0) continue;
      const Rational f = eq[k][col];
      for (std::size_t j = col; j <= r; ++j) eq[k][j] -= f * eq[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t k = row; k < n; ++k) {
    if (eq[k][r] != 0) return std::nullopt;
  }
  if (pivot_col.size() != r) throw std::invalid_argument("solve_left: dependent rows");
  RatVec c(r);
  for (std::size_t i = 0; i < row; ++i) c[pivot_col[i]] = eq[i][r];
  return c;
}

IntMat multiply(const IntMat& a, const IntMat& b, std::size_t inner, std::size_t cols) {
  IntMat out(a.size(), IntVec(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

SmithForm smith_normal_form(const IntMat& a, std::size_t n, std::size_t m) {
  IntMat d = a;
  IntMat u = identity_matrix(n);
  IntMat v = identity_matrix(m);
  auto swap_cols = [&](IntMat& mat, std::size_t i, std::size_t j) {
    for (auto& row : mat) std::swap(row[i], row[j]);
  };
  auto col_axpy = [&](IntMat& mat, std::size_t dst, std::size_t src, const Integer& q) {
    for (auto& row : mat) row[dst] -= q * row[src];
  };
  const std::size_t steps = std::min(n, m);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // smallest nonzero entry of the trailing block moves to (t, t)
      std::size_t bi = n, bj = m;
      for (std::size_t i = t; i < n; ++i) {
        for (std::size_t j = t; j < m; ++j) {
          if (d[i][j] == 0) continue;
          if (bi == n || abs(d[i][j]) < abs(d[bi][bj])) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == n) break;
      if (bi != t) {
        std::swap(d[bi], d[t]);
        std::swap(u[bi], u[t]);
      }
      if (bj != t) {
        swap_cols(d, bj, t);
        swap_cols(v, bj, t);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i) {
        if (d[i][t] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d[i][t].get_mpz_t(), d[t][t].get_mpz_t());
        axpy_row(d[i], d[t], q);
        axpy_row(u[i], u[t], q);
        if (d[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m; ++j) {
        if (d[t][j] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), d[t][j].get_mpz_t(), d[t][t].get_mpz_t());
        col_axpy(d, j, t, q);
        col_axpy(v, j, t, q);
        if (d[t][j] != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the trailing block by the pivot
      std::size_t bad = n;
      for (std::size_t i = t + 1; i < n && bad == n; ++i) {
        for (std::size_t j = t + 1; j < m; ++j) {
          if (d[i][j] % d[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == n) break;
      for (std::size_t j = 0; j < m; ++j) d[t][j] += d[bad][j];
      for (std::size_t j = 0; j < n; ++j) u[t][j] += u[bad][j];
    }
    if (d[t][t] < 0) {
      for (auto& x : d[t]) x = -x;
      for (auto& x : u[t]) x = -x;
    }
  }
  SmithForm out{std::move(u), std::move(v), IntVec(steps)};
  for (std::size_t t = 0; t < steps; ++t) out.diagonal[t] = d[t][t];
  return out;
}

}  // namespace blocklie
