#ifndef NEFCALC_CERTIFIED_HPP
#define NEFCALC_CERTIFIED_HPP

#include <memory>
#include <optional>

#include "nefcalc/rational.hpp"

namespace nefcalc {

enum class Cmp { LT, GT, EQ, UNDECIDED };

struct Interval {
  Rational lo, hi;
  bool is_point() const { return lo == hi; }
};

// Canonical form coeff * base^(p/q) with 0 <= p < q, gcd(p,q) = 1 and
// base > 0 when p > 0. Every radical value appearing in the Diskant and
// radii bound formulas that admits an exact comparison lands in this shape.
struct Radical {
  Rational coeff;
  Rational base = 1;
  unsigned long p = 0;
  unsigned long q = 1;
  bool is_rational() const { return p == 0; }
};

// Expression tree over exact rationals with {+,-,*,/} and rational powers.
// Enclosures are rational intervals computed at a requested bit precision;
// exact() recovers a Radical when the value is one, enabling algebraic
// tie certificates instead of endless refinement.
class CertifiedReal {
 public:
  CertifiedReal() : CertifiedReal(Rational(0)) {}
  explicit CertifiedReal(const Rational& value);

  friend CertifiedReal operator+(const CertifiedReal&, const CertifiedReal&);
  friend CertifiedReal operator-(const CertifiedReal&, const CertifiedReal&);
  friend CertifiedReal operator*(const CertifiedReal&, const CertifiedReal&);
  friend CertifiedReal operator/(const CertifiedReal&, const CertifiedReal&);

  // x^(num/den); fractional powers require a positive base at evaluation.
  CertifiedReal pow(long num, unsigned long den) const;

  // nullopt means the requested precision did not suffice (e.g. a divisor
  // enclosure still straddles zero); retry with more bits.
  std::optional<Interval> enclosure(unsigned bits) const;

  std::optional<Radical> exact() const;

  struct Node;  // exposed for the evaluator in certified.cpp

  friend std::optional<Interval> enclose(const CertifiedReal&, unsigned);
  friend Cmp compare_certified(const CertifiedReal&, const CertifiedReal&,
                               unsigned, unsigned*);

 private:
  explicit CertifiedReal(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

// Refines by doubling precision from 64 bits up to max_bits.
std::optional<Interval> enclose(const CertifiedReal& x, unsigned max_bits);

Cmp compare_certified(const CertifiedReal& a, const CertifiedReal& b,
                      unsigned max_bits, unsigned* bits_used = nullptr);

// Exact comparison of two canonical radicals.
Cmp compare_radicals(const Radical& a, const Radical& b);

}  // namespace nefcalc

#endif
