#ifndef NEFCALC_RADII_HPP
#define NEFCALC_RADII_HPP

#include <vector>

#include "nefcalc/polytope.hpp"
#include "nefcalc/rational.hpp"

namespace nefcalc {

// Result of the containment LP  max t : t*Q + x <= P. t_star is the slope
// s(P, Q); the translation is the lexicographically smallest optimal
// witness and the dual multipliers certify that no larger t is feasible.
struct RadiiResult {
  Rational t_star;
  Vec translation;
  std::vector<int> active_facets;
  Vec dual_certificate;
};

// r(P; Q): largest t with t*Q + x contained in P for some translation x.
RadiiResult inradius(const Polytope& p, const Polytope& q);

// R(P; Q) = 1 / inradius(Q, P); t_star holds the reciprocal value.
RadiiResult outradius(const Polytope& p, const Polytope& q);

Rational slope(const Polytope& p, const Polytope& q);

}  // namespace nefcalc

#endif
