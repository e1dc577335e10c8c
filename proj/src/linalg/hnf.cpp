#include "spcsp/linalg.hpp"

namespace spcsp::linalg {

namespace {

// Columns i, j  <-  (s*ci + t*cj, u*ci + v*cj) on both the matrix and the transform.
void combine(IntMatrix& m, IntMatrix& u, int i, int j, const mpz_class& s, const mpz_class& t,
             const mpz_class& p, const mpz_class& q) {
  auto apply = [&](IntMatrix& x) {
    for (auto& row : x) {
      mpz_class a = row[i], b = row[j];
      row[i] = s * a + t * b;
      row[j] = p * a + q * b;
    }
  };
  apply(m);
  apply(u);
}

}  // namespace

std::optional<std::vector<mpz_class>> solve_integer(const IntMatrix& a, const std::vector<mpz_class>& b,
                                                    int columns) {
  size_t rows = a.size();
  IntMatrix h = a;
  IntMatrix u(columns, std::vector<mpz_class>(columns, 0));
  for (int i = 0; i < columns; ++i) u[i][i] = 1;

  std::vector<int> pivot_col(rows, -1);
  int pc = 0;
  for (size_t r = 0; r < rows && pc < columns; ++r) {
    int nz = -1;
    for (int j = pc; j < columns; ++j)
      if (h[r][j] != 0) {
        nz = j;
        break;
      }
    if (nz < 0) continue;
    if (nz != pc)
      for (auto* x : {&h, &u})
        for (auto& row : *x) std::swap(row[pc], row[nz]);
    for (int j = pc + 1; j < columns; ++j) {
      if (h[r][j] == 0) continue;
      mpz_class g, s, t;
      mpz_class x = h[r][pc], y = h[r][j];
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
      mpz_class xg = x / g, yg = y / g;
      // det [[s, -yg], [t, xg]] = s*xg + t*yg = 1
      combine(h, u, pc, j, s, t, -yg, xg);
    }
    if (h[r][pc] < 0)
      for (auto* x : {&h, &u})
        for (auto& row : *x) row[pc] = -row[pc];
    // Keep earlier entries of this row small.
    for (int j = 0; j < pc; ++j) {
      mpz_class f;
      mpz_fdiv_q(f.get_mpz_t(), h[r][j].get_mpz_t(), h[r][pc].get_mpz_t());
      if (f == 0) continue;
      for (auto* x : {&h, &u})
        for (auto& row : *x) row[j] -= f * row[pc];
    }
    pivot_col[r] = pc++;
  }

  std::vector<mpz_class> z(columns, 0);
  for (size_t r = 0; r < rows; ++r) {
    mpz_class residual = b[r];
    int limit = pivot_col[r] >= 0 ? pivot_col[r] : columns;
    for (int j = 0; j < limit; ++j) residual -= h[r][j] * z[j];
    if (pivot_col[r] < 0) {
      for (int j = limit; j < columns; ++j) residual -= h[r][j] * z[j];
      if (residual != 0) return std::nullopt;
      continue;
    }
    const mpz_class& d = h[r][pivot_col[r]];
    if (!mpz_divisible_p(residual.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    z[pivot_col[r]] = residual / d;
  }
  std::vector<mpz_class> y(columns, 0);
  for (int i = 0; i < columns; ++i)
    for (int j = 0; j < columns; ++j)
      if (u[i][j] != 0 && z[j] != 0) y[i] += u[i][j] * z[j];
  return y;
}

}  // namespace spcsp::linalg
