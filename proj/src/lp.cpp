#include "nefcalc/lp.hpp"

#include "nefcalc/errors.hpp"

namespace nefcalc {

// Dense tableau simplex over exact rationals. The free variables are split
// as y+ - y-, slacks complete the basis, and the starting point is shifted
// to the supplied feasible solution so the initial basis is feasible.
LpSolution solve_lp(const LpProblem& prob, const Vec& feasible) {
  int m = static_cast<int>(prob.a.size());
  int n = static_cast<int>(prob.c.size());
  int cols = 2 * n + m;

  Vec bshift(m);
  for (int i = 0; i < m; ++i) {
    bshift[i] = prob.b[i] - dot(prob.a[i], feasible);
    if (bshift[i] < 0)
      throw InvalidInput("supplied LP start point is infeasible");
  }

  Matrix t(m, Vec(cols + 1, Rational(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      t[i][j] = prob.a[i][j];
      t[i][n + j] = -prob.a[i][j];
    }
    t[i][2 * n + i] = 1;
    t[i][cols] = bshift[i];
  }
  Vec zrow(cols, Rational(0));
  for (int j = 0; j < n; ++j) {
    zrow[j] = -prob.c[j];
    zrow[n + j] = prob.c[j];
  }
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) basis[i] = 2 * n + i;

  for (;;) {
    int enter = -1;
    for (int j = 0; j < cols; ++j) {
      if (zrow[j] < 0) {
        enter = j;  // Bland: first improving column
        break;
      }
    }
    if (enter < 0) break;

    int leave = -1;
    Rational best_ratio;
    for (int i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][cols] / t[i][enter];
      if (leave < 0 || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave < 0) {
      LpSolution unb;
      unb.bounded = false;
      return unb;
    }

    Rational pivot = t[leave][enter];
    for (int j = 0; j <= cols; ++j) t[leave][j] /= pivot;
    for (int i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (int j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
    }
    Rational zf = zrow[enter];
    if (zf != 0) {
      for (int j = 0; j < cols; ++j) zrow[j] -= zf * t[leave][j];
    }
    basis[leave] = enter;
  }

  LpSolution sol;
  Vec y(2 * n, Rational(0));
  for (int i = 0; i < m; ++i) {
    if (basis[i] < 2 * n) y[basis[i]] = t[i][cols];
  }
  sol.z = feasible;
  for (int j = 0; j < n; ++j) sol.z[j] += y[j] - y[n + j];
  sol.value = dot(prob.c, sol.z);
  sol.dual.resize(m);
  for (int i = 0; i < m; ++i) sol.dual[i] = zrow[2 * n + i];
  return sol;
}

}  // namespace nefcalc
