#ifndef NEFCALC_LP_HPP
#define NEFCALC_LP_HPP

#include <vector>

#include "nefcalc/linalg.hpp"
#include "nefcalc/rational.hpp"

namespace nefcalc {

// maximize c.z  subject to  A z <= b,  z free.
struct LpProblem {
  Matrix a;
  Vec b;
  Vec c;
};

struct LpSolution {
  bool bounded = true;
  Rational value;
  Vec z;
  // Multipliers y >= 0 with y.A = c and y.b = value; the exact optimality
  // certificate.
  Vec dual;
};

// Exact rational simplex with Bland's rule. The caller supplies a feasible
// point, which every use in this library has at hand; no phase-1 needed.
LpSolution solve_lp(const LpProblem& prob, const Vec& feasible);

}  // namespace nefcalc

#endif
