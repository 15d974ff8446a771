#ifndef NEFCALC_BOUNDS_HPP
#define NEFCALC_BOUNDS_HPP

#include <optional>

#include "nefcalc/certified.hpp"
#include "nefcalc/mixedvol.hpp"
#include "nefcalc/polytope.hpp"

namespace nefcalc {

// Certified enclosures of the radius bounds derived from the Diskant
// inequality. Lower/upper are exact expression trees; enclose() them at
// whatever precision a report needs.
struct RadiusBounds {
  CertifiedReal lower;
  CertifiedReal upper;
};

struct DiskantResult {
  CertifiedReal lhs;  // s_{d-1}^{d/(d-1)} - s_d s_0^{1/(d-1)}
  CertifiedReal rhs;  // (s_{d-1}^{1/(d-1)} - slope * s_0^{1/(d-1)})^d
  Cmp verdict;        // lhs vs rhs
  bool pass;          // GT or EQ
  bool exact_tie;
  std::optional<Interval> deficit;  // enclosure of lhs - rhs
  unsigned bits_used;
};

struct BonnesenResult {
  Rational rhs;  // s_1^2 - s_0 s_2
  std::optional<Interval> lhs;  // (s_0^2/4)(R - r)^2
  Cmp verdict;
  bool pass;
  bool exact_tie;
  unsigned bits_used;
};

struct ProportionalityResult {
  bool proportional;                 // condition s_{d-1}^d = s_0 s_d^{d-1}
  std::optional<CertifiedReal> ratio;  // (s_d/s_0)^{1/d} when proportional
  bool witness_checked = false;      // polytopes were supplied
  bool witness_ok = false;           // Q == lambda*P + x verified on H-reps
  std::optional<Rational> lambda;
};

// Theorem-G bounds on the inradius r(P;Q). Throws NotBig when an endpoint
// vanishes and UnrealizableSequence when the Diskant radicand is negative,
// which certifies the sequence cannot come from nef and big classes.
RadiusBounds inradius_bounds(const NefSequence& seq);

// Bounds on the outradius R(P;Q), obtained by applying the inradius bounds
// to the reversed sequence and taking reciprocals.
RadiusBounds outradius_bounds(const NefSequence& seq);

DiskantResult diskant_check(const NefSequence& seq, const Rational& slope,
                            unsigned max_bits);

BonnesenResult bonnesen_check(const NefSequence& seq, const CertifiedReal& r,
                              const CertifiedReal& big_r, unsigned max_bits);

ProportionalityResult proportionality_test(const NefSequence& seq);
ProportionalityResult proportionality_test(const NefSequence& seq,
                                           const Polytope& p,
                                           const Polytope& q);

}  // namespace nefcalc

#endif
