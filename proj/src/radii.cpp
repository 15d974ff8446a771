#include "nefcalc/radii.hpp"

#include "nefcalc/errors.hpp"
#include "nefcalc/lp.hpp"

namespace nefcalc {

namespace {

void require_full_dim(const Polytope& p, const char* which) {
  if (!p.full_dimensional())
    throw DegenerateInput(std::string(which) +
                          " must be full-dimensional for the radii LP");
}

}  // namespace

RadiiResult inradius(const Polytope& p, const Polytope& q) {
  require_full_dim(p, "first polytope");
  require_full_dim(q, "second polytope");
  if (p.dim() != q.dim())
    throw InvalidInput("radii of polytopes in different dimensions");
  int d = p.dim();
  int m = static_cast<int>(p.facets().size());

  // Variables (t, x): maximize t subject to t*h_Q(u) + <x,u> <= h_P(u)
  // over the facet normals u of P, plus t >= 0. Containment of t*Q + x in
  // P is exactly support domination on P's facets.
  LpProblem prob;
  prob.c.assign(d + 1, Rational(0));
  prob.c[0] = 1;
  for (const auto& f : p.facets()) {
    Vec row(d + 1);
    row[0] = q.support(f.normal);
    for (int j = 0; j < d; ++j) row[j + 1] = f.normal[j];
    prob.a.push_back(std::move(row));
    prob.b.push_back(f.offset);
  }
  {
    Vec row(d + 1, Rational(0));
    row[0] = -1;
    prob.a.push_back(std::move(row));
    prob.b.push_back(Rational(0));
  }

  Vec start(d + 1, Rational(0));
  for (int j = 0; j < d; ++j) start[j + 1] = p.vertices()[0][j];
  LpSolution sol = solve_lp(prob, start);
  if (!sol.bounded)
    throw InternalError("containment LP unbounded on bounded polytopes");

  Rational t_star = sol.z[0];

  // Among all optimal translations, pin the lexicographically smallest by
  // minimizing the coordinates one at a time at fixed optimum.
  Vec current = sol.z;
  for (int k = 0; k < d; ++k) {
    LpProblem sub = prob;
    Vec row(d + 1, Rational(0));
    row[0] = -1;
    sub.a.push_back(row);
    sub.b.push_back(-t_star);  // t >= t_star
    for (int j = 0; j < k; ++j) {
      Vec fix_up(d + 1, Rational(0)), fix_dn(d + 1, Rational(0));
      fix_up[j + 1] = 1;
      fix_dn[j + 1] = -1;
      sub.a.push_back(fix_up);
      sub.b.push_back(current[j + 1]);
      sub.a.push_back(fix_dn);
      sub.b.push_back(-current[j + 1]);
    }
    sub.c.assign(d + 1, Rational(0));
    sub.c[k + 1] = -1;
    LpSolution s2 = solve_lp(sub, current);
    if (!s2.bounded)
      throw InternalError("translation minimization unbounded");
    current = s2.z;
  }

  RadiiResult res;
  res.t_star = t_star;
  res.translation.assign(current.begin() + 1, current.end());

  for (int i = 0; i < m; ++i) {
    if (dot(prob.a[i], current) == prob.b[i]) res.active_facets.push_back(i);
  }
  res.dual_certificate = sol.dual;

  // Exact feasibility and optimality checks on the certificate.
  for (int i = 0; i < m; ++i) {
    if (dot(prob.a[i], current) > prob.b[i])
      throw InternalError("radii witness violates a facet of P");
  }
  Vec combo(d + 1, Rational(0));
  Rational dual_value(0);
  for (std::size_t i = 0; i < prob.a.size(); ++i) {
    if (sol.dual[i] < 0) throw InternalError("negative dual multiplier");
    for (int j = 0; j <= d; ++j) combo[j] += sol.dual[i] * prob.a[i][j];
    dual_value += sol.dual[i] * prob.b[i];
  }
  if (combo != prob.c || dual_value != t_star)
    throw InternalError("radii dual certificate does not close the gap");

  return res;
}

RadiiResult outradius(const Polytope& p, const Polytope& q) {
  RadiiResult inner = inradius(q, p);
  if (inner.t_star == 0)
    throw InvalidInput("outradius undefined: inradius(Q, P) is zero");
  RadiiResult res = inner;
  res.t_star = Rational(1) / inner.t_star;
  return res;
}

Rational slope(const Polytope& p, const Polytope& q) {
  return inradius(p, q).t_star;
}

}  // namespace nefcalc
