#ifndef NEFCALC_MIXEDVOL_HPP
#define NEFCALC_MIXEDVOL_HPP

#include <vector>

#include "nefcalc/polytope.hpp"
#include "nefcalc/rational.hpp"

namespace nefcalc {

// The intersection-number sequence s_i = d! * V(P^[i], Q^[d-i]) of a pair
// of nef classes. Sequences parsed from user input are "free": they carry
// no guarantee of being realizable by polytopes.
struct NefSequence {
  int degree = 0;
  std::vector<Rational> s;  // s_0 .. s_d
  bool realized = false;

  bool alpha_big() const { return s.back() > 0; }
  bool beta_big() const { return s.front() > 0; }
  NefSequence reversed() const;
};

// Exact Euclidean d-volume; zero iff the polytope is lower-dimensional.
Rational volume(const Polytope& p);

// V(P_1, ..., P_d) by inclusion-exclusion polarization over Minkowski sums,
// normalized so that V(P, ..., P) = volume(P).
Rational mixed_volume(const std::vector<Polytope>& polytopes);

// Coefficients c_0..c_d of t -> vol(P + tQ), by exact evaluation at
// t = 0..d and Lagrange interpolation. Independent of mixed_volume.
std::vector<Rational> volume_polynomial(const Polytope& p, const Polytope& q);

NefSequence intersection_sequence(const Polytope& p, const Polytope& q);

Integer factorial(int n);
Integer binomial(int n, int k);

}  // namespace nefcalc

#endif
