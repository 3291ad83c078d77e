#include "qbg/simplex.hpp"

#include <stdexcept>

#include "qbg/errors.hpp"

namespace qbg {

namespace {

// Dense tableau; row[i] has n+1 entries, the last being the rhs. The obj row
// holds reduced costs, with obj[n] = -(current objective value).
struct Tableau {
  int m, n;
  std::vector<std::vector<Rational>> row;
  std::vector<Rational> obj;
  std::vector<int> basis;
  int pivots = 0;

  void pivot(int r, int col) {
    Rational piv = row[r][col];
    for (auto& v : row[r]) v /= piv;
    for (int i = 0; i < m; ++i) {
      if (i == r || row[i][col] == 0) continue;
      Rational f = row[i][col];
      for (int j = 0; j <= n; ++j) row[i][j] -= f * row[r][j];
    }
    if (obj[col] != 0) {
      Rational f = obj[col];
      for (int j = 0; j <= n; ++j) obj[j] -= f * row[r][j];
    }
    basis[r] = col;
    ++pivots;
  }

  // Zero the reduced cost of every basic column.
  void canonicalize() {
    for (int i = 0; i < m; ++i) {
      if (obj[basis[i]] == 0) continue;
      Rational f = obj[basis[i]];
      for (int j = 0; j <= n; ++j) obj[j] -= f * row[i][j];
    }
  }

  // Bland's rule: enter the lowest-index improving column, leave by minimum
  // ratio with lowest basis index on ties.
  void solve(const std::vector<bool>& allowed) {
    while (true) {
      int col = -1;
      for (int j = 0; j < n; ++j)
        if (allowed[j] && obj[j] > 0) {
          col = j;
          break;
        }
      if (col < 0) return;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m; ++i) {
        if (row[i][col] <= 0) continue;
        Rational ratio = row[i][n] / row[i][col];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) throw std::runtime_error("linear program is unbounded");
      pivot(leave, col);
    }
  }

  Rational objective() const { return -obj[n]; }
};

}  // namespace

LpSolution simplex_max(const std::vector<std::vector<Rational>>& A,
                       const std::vector<Rational>& b, const std::vector<Rational>& c) {
  const int m = static_cast<int>(A.size());
  const int ns = static_cast<int>(c.size());
  if (static_cast<int>(b.size()) != m)
    throw ValidationError("simplex: rhs size does not match constraint count");
  for (const auto& row : A)
    if (static_cast<int>(row.size()) != ns)
      throw ValidationError("simplex: constraint row width does not match objective");

  Tableau t;
  t.m = m;
  t.n = ns + m;  // structural plus one artificial per row
  t.row.assign(m, std::vector<Rational>(t.n + 1, Rational(0)));
  t.basis.resize(m);
  for (int i = 0; i < m; ++i) {
    bool flip = b[i] < 0;
    for (int j = 0; j < ns; ++j) t.row[i][j] = flip ? Rational(-A[i][j]) : A[i][j];
    t.row[i][t.n] = flip ? Rational(-b[i]) : b[i];
    t.row[i][ns + i] = 1;
    t.basis[i] = ns + i;
  }

  std::vector<bool> allowed(t.n, true);

  // Phase 1: maximize minus the sum of artificials.
  t.obj.assign(t.n + 1, Rational(0));
  for (int i = 0; i < m; ++i) t.obj[ns + i] = -1;
  t.canonicalize();
  t.solve(allowed);
  if (t.objective() != 0) throw ValidationError("linear program is infeasible");

  // Drive artificials out of the basis; a row that cannot pivot onto a
  // structural column is redundant and gets dropped.
  for (int i = m - 1; i >= 0; --i) {
    if (t.basis[i] < ns) continue;
    int col = -1;
    for (int j = 0; j < ns; ++j)
      if (t.row[i][j] != 0) {
        col = j;
        break;
      }
    if (col >= 0) {
      t.pivot(i, col);
    } else {
      t.row.erase(t.row.begin() + i);
      t.basis.erase(t.basis.begin() + i);
      --t.m;
    }
  }

  // Phase 2 over structural columns only.
  for (int j = ns; j < t.n; ++j) allowed[j] = false;
  t.obj.assign(t.n + 1, Rational(0));
  for (int j = 0; j < ns; ++j) t.obj[j] = c[j];
  t.canonicalize();
  t.solve(allowed);

  LpSolution sol;
  sol.value = t.objective();
  sol.x.assign(ns, Rational(0));
  for (int i = 0; i < t.m; ++i)
    if (t.basis[i] < ns) sol.x[t.basis[i]] = t.row[i][t.n];
  sol.pivots = t.pivots;
  return sol;
}

}  // namespace qbg
