#include "nefcalc/bounds.hpp"

#include "nefcalc/errors.hpp"

namespace nefcalc {

namespace {

void require_big(const NefSequence& seq) {
  if (seq.s.front() == 0 || seq.s.back() == 0)
    throw NotBig("bounds require s_0 > 0 and s_d > 0");
}

void require_degree(const NefSequence& seq, int min_d, const char* what) {
  if (seq.degree < min_d)
    throw InvalidInput(std::string(what) + " needs degree >= " +
                       std::to_string(min_d));
}

// The radicand s_{d-1}^{d/(d-1)} - s_0^{1/(d-1)} s_d is nonnegative iff
// s_{d-1}^d >= s_0 s_d^{d-1}, an exact rational test.
void require_realizable_front(const NefSequence& seq) {
  int d = seq.degree;
  if (pow_int(seq.s[d - 1], d) < seq.s[0] * pow_int(seq.s[d], d - 1))
    throw UnrealizableSequence(
        "negative Diskant radicand: the sequence violates the "
        "Khovanskii-Teissier power inequality at i = d-1");
}

}  // namespace

RadiusBounds inradius_bounds(const NefSequence& seq) {
  require_degree(seq, 2, "inradius bound");
  require_big(seq);
  require_realizable_front(seq);
  int d = seq.degree;
  long dm1 = d - 1;
  CertifiedReal s0(seq.s[0]), sd(seq.s[d]), sdm1(seq.s[d - 1]);

  CertifiedReal radicand =
      sdm1.pow(d, dm1) - s0.pow(1, dm1) * sd;
  CertifiedReal lower =
      (sdm1.pow(1, dm1) - radicand.pow(1, d)) / s0.pow(1, dm1);
  CertifiedReal upper(seq.s[d] / seq.s[d - 1]);
  return {lower, upper};
}

RadiusBounds outradius_bounds(const NefSequence& seq) {
  require_degree(seq, 2, "outradius bound");
  require_big(seq);
  NefSequence rev = seq.reversed();
  require_realizable_front(rev);
  int d = seq.degree;
  long dm1 = d - 1;

  CertifiedReal lower(seq.s[1] / seq.s[0]);
  // Reciprocal of the Theorem-G lower bound for the reversed roles.
  CertifiedReal s0(rev.s[0]), sd(rev.s[d]), sdm1(rev.s[d - 1]);
  CertifiedReal radicand = sdm1.pow(d, dm1) - s0.pow(1, dm1) * sd;
  CertifiedReal upper =
      s0.pow(1, dm1) / (sdm1.pow(1, dm1) - radicand.pow(1, d));
  return {lower, upper};
}

DiskantResult diskant_check(const NefSequence& seq, const Rational& slope,
                            unsigned max_bits) {
  require_degree(seq, 2, "Diskant check");
  require_big(seq);
  int d = seq.degree;
  long dm1 = d - 1;
  if (slope < 0) throw InvalidInput("slope must be nonnegative");
  if (slope * seq.s[d - 1] > seq.s[d])
    throw InvalidInput("slope exceeds the certified upper bound s_d/s_{d-1}");

  CertifiedReal s0(seq.s[0]), sd(seq.s[d]), sdm1(seq.s[d - 1]);
  DiskantResult res;
  res.lhs = sdm1.pow(d, dm1) - sd * s0.pow(1, dm1);
  res.rhs =
      (sdm1.pow(1, dm1) - CertifiedReal(slope) * s0.pow(1, dm1)).pow(d, 1);
  res.verdict = compare_certified(res.lhs, res.rhs, max_bits, &res.bits_used);
  res.pass = res.verdict == Cmp::GT || res.verdict == Cmp::EQ;
  res.exact_tie = res.verdict == Cmp::EQ;
  res.deficit = enclose(res.lhs - res.rhs, max_bits);
  return res;
}

BonnesenResult bonnesen_check(const NefSequence& seq, const CertifiedReal& r,
                              const CertifiedReal& big_r, unsigned max_bits) {
  if (seq.degree != 2) throw InvalidInput("Bonnesen's inequality needs d = 2");
  require_big(seq);
  BonnesenResult res;
  res.rhs = seq.s[1] * seq.s[1] - seq.s[0] * seq.s[2];
  CertifiedReal lhs =
      CertifiedReal(seq.s[0] * seq.s[0] / 4) * (big_r - r).pow(2, 1);
  res.lhs = enclose(lhs, max_bits);
  res.verdict =
      compare_certified(lhs, CertifiedReal(res.rhs), max_bits, &res.bits_used);
  res.pass = res.verdict == Cmp::LT || res.verdict == Cmp::EQ;
  res.exact_tie = res.verdict == Cmp::EQ;
  return res;
}

ProportionalityResult proportionality_test(const NefSequence& seq) {
  require_degree(seq, 1, "proportionality test");
  require_big(seq);
  int d = seq.degree;
  ProportionalityResult res;
  res.proportional =
      pow_int(seq.s[d - 1], d) == seq.s[0] * pow_int(seq.s[d], d - 1);
  if (res.proportional)
    res.ratio = CertifiedReal(seq.s[d] / seq.s[0]).pow(1, d);
  return res;
}

ProportionalityResult proportionality_test(const NefSequence& seq,
                                           const Polytope& p,
                                           const Polytope& q) {
  ProportionalityResult res = proportionality_test(seq);
  res.witness_checked = true;
  if (!res.proportional) return res;
  // Geometric witness: Q = lambda * P + x with lambda^d = s_0 / s_d.
  Rational lambda;
  if (!perfect_root(seq.s[0] / seq.s[seq.degree], seq.degree, lambda))
    return res;
  res.lambda = lambda;
  Polytope scaled = p.scaled(lambda);
  Vec x = sub(q.vertices().front(), scaled.vertices().front());
  res.witness_ok = scaled.translated(x) == q;
  return res;
}

}  // namespace nefcalc
