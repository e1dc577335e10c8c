#include "spcsp/linalg.hpp"

namespace spcsp::linalg {

std::optional<std::vector<mpq_class>> feasible_point(const RatMatrix& a, const std::vector<mpq_class>& b,
                                                     int columns) {
  size_t rows = a.size();
  int n = columns;
  // Tableau [A | b]; artificial columns are implicit and never re-enter.
  RatMatrix tab(rows, std::vector<mpq_class>(n + 1));
  for (size_t r = 0; r < rows; ++r) {
    bool neg = b[r] < 0;
    for (int j = 0; j < n; ++j) tab[r][j] = neg ? mpq_class(-a[r][j]) : a[r][j];
    tab[r][n] = neg ? mpq_class(-b[r]) : b[r];
  }
  std::vector<int> basis(rows);
  for (size_t r = 0; r < rows; ++r) basis[r] = n + static_cast<int>(r);
  std::vector<mpq_class> cost(n + 1, 0);
  for (size_t r = 0; r < rows; ++r)
    for (int j = 0; j <= n; ++j) cost[j] -= tab[r][j];

  std::vector<int> nz;
  for (;;) {
    int enter = -1;
    for (int j = 0; j < n; ++j)
      if (sgn(cost[j]) < 0) {
        enter = j;
        break;
      }
    if (enter < 0) break;
    int leave = -1;
    mpq_class best;
    for (size_t r = 0; r < rows; ++r) {
      if (sgn(tab[r][enter]) <= 0) continue;
      mpq_class ratio = tab[r][n] / tab[r][enter];
      if (leave < 0 || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        leave = static_cast<int>(r);
        best = ratio;
      }
    }
    if (leave < 0) break;  // unbounded direction; cannot happen for phase one
    auto& prow = tab[leave];
    mpq_class piv = prow[enter];
    nz.clear();
    for (int j = 0; j <= n; ++j)
      if (sgn(prow[j]) != 0) {
        prow[j] /= piv;
        nz.push_back(j);
      }
    auto eliminate = [&](std::vector<mpq_class>& row) {
      if (sgn(row[enter]) == 0) return;
      mpq_class f = row[enter];
      for (int j : nz) row[j] -= f * prow[j];
    };
    for (size_t r = 0; r < rows; ++r)
      if (static_cast<int>(r) != leave) eliminate(tab[r]);
    eliminate(cost);
    basis[leave] = enter;
  }
  mpq_class infeasibility = 0;
  for (size_t r = 0; r < rows; ++r)
    if (basis[r] >= n) infeasibility += tab[r][n];
  if (sgn(infeasibility) != 0) return std::nullopt;
  std::vector<mpq_class> x(n, 0);
  for (size_t r = 0; r < rows; ++r)
    if (basis[r] < n) x[basis[r]] = tab[r][n];
  return x;
}

}  // namespace spcsp::linalg
