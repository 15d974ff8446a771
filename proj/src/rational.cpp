#include "nefcalc/rational.hpp"

#include <gmp.h>

#include "nefcalc/errors.hpp"

namespace nefcalc {

namespace {

Integer parse_integer(const std::string& s) {
  if (s.empty()) throw ParseError("empty integer literal");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ParseError("bare sign in integer literal");
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9')
      throw ParseError("invalid integer literal '" + s + "'");
  }
  return Integer(s);
}

}  // namespace

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    return Rational(parse_integer(s));
  }
  Integer num = parse_integer(s.substr(0, slash));
  Integer den = parse_integer(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + s + "'");
  return Rational(num) / Rational(den);
}

std::string format_rational(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

Rational pow_int(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = e < 0 ? Rational(1) / base : base;
  unsigned long n = e < 0 ? static_cast<unsigned long>(-e)
                          : static_cast<unsigned long>(e);
  Rational acc(1);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

Integer iroot(const Integer& a, unsigned long n, bool* exact) {
  if (a < 0) throw DomainError("iroot of a negative integer");
  Integer r;
  int is_exact =
      mpz_root(r.backend().data(), a.backend().data(), n);
  if (exact) *exact = is_exact != 0;
  return r;
}

bool perfect_root(const Rational& a, unsigned long n, Rational& out) {
  if (a < 0) return false;
  bool num_ok = false, den_ok = false;
  Integer rn = iroot(numerator(a), n, &num_ok);
  Integer rd = iroot(denominator(a), n, &den_ok);
  if (!num_ok || !den_ok) return false;
  out = Rational(rn) / Rational(rd);
  return true;
}

}  // namespace nefcalc
