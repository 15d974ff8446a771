#ifndef NEFCALC_RATIONAL_HPP
#define NEFCALC_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace nefcalc {

// All geometry and LP code runs on exact GMP rationals; there is no
// floating-point path anywhere in the library.
using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using Vec = std::vector<Rational>;

inline Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}
inline Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

// Parses "p/q" or a plain integer string. Rejects floats, exponents and a
// zero denominator.
Rational parse_rational(const std::string& s);

// Always formats as "p/q", including "3/1" for integers, so serialized
// values round-trip through parse_rational unchanged.
std::string format_rational(const Rational& q);

Rational pow_int(const Rational& base, long e);

// floor(a^(1/n)) for a >= 0; exact flag reports whether a is a perfect
// n-th power.
Integer iroot(const Integer& a, unsigned long n, bool* exact = nullptr);

// Exact n-th root of a nonnegative rational, if it exists.
bool perfect_root(const Rational& a, unsigned long n, Rational& out);

}  // namespace nefcalc

#endif
