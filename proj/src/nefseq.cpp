#include "nefcalc/nefseq.hpp"

#include "nefcalc/errors.hpp"

namespace nefcalc {

LogConcavityReport check_log_concavity(const NefSequence& seq) {
  int d = seq.degree;
  if (d < 2) throw InvalidInput("log-concavity check needs degree >= 2");
  LogConcavityReport rep;
  for (int i = 1; i <= d - 1; ++i) {
    LogConcavityReport::Entry e;
    e.index = i;
    e.deficit = seq.s[i] * seq.s[i] - seq.s[i - 1] * seq.s[i + 1];
    e.holds = e.deficit >= 0;
    e.equality = e.deficit == 0;
    if (!e.holds) rep.pass = false;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

KtPowerReport check_kt_power(const NefSequence& seq) {
  int d = seq.degree;
  if (d < 1) throw InvalidInput("power-form check needs degree >= 1");
  KtPowerReport rep;
  for (int i = 0; i <= d; ++i) {
    KtPowerReport::Entry e;
    e.index = i;
    e.deficit = pow_int(seq.s[i], d) -
                pow_int(seq.s[0], d - i) * pow_int(seq.s[d], i);
    e.holds = e.deficit >= 0;
    e.equality = e.deficit == 0;
    if (!e.holds) rep.pass = false;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

MinkowskiReport check_minkowski(const Polytope& p, const Polytope& q,
                                unsigned max_bits) {
  if (p.dim() != q.dim())
    throw InvalidInput("Minkowski check on polytopes of different dimensions");
  int d = p.dim();
  NefSequence seq = intersection_sequence(p, q);
  Rational sum_vol = Rational(factorial(d)) * volume(p.minkowski_sum(q));

  MinkowskiReport rep;
  rep.sum_volume_scaled = sum_vol;

  // ((a+b)^d) expands exactly into the binomial sum of the s_i.
  Rational expansion(0);
  for (int i = 0; i <= d; ++i)
    expansion += Rational(binomial(d, i)) * seq.s[i];
  rep.expansion_identity = expansion == sum_vol;

  CertifiedReal lhs = CertifiedReal(sum_vol).pow(1, d);
  CertifiedReal rhs = CertifiedReal(seq.s[d]).pow(1, d) +
                      CertifiedReal(seq.s[0]).pow(1, d);
  rep.verdict = compare_certified(lhs, rhs, max_bits, &rep.bits_used);
  rep.pass = rep.verdict == Cmp::GT || rep.verdict == Cmp::EQ;
  rep.equality = rep.verdict == Cmp::EQ;
  return rep;
}

EqualityConditionsReport check_equality_conditions(const NefSequence& seq) {
  int d = seq.degree;
  if (d < 1) throw InvalidInput("equality conditions need degree >= 1");
  if (seq.s[0] == 0 || seq.s[d] == 0)
    throw NotBig("equality conditions assume s_0 > 0 and s_d > 0");

  EqualityConditionsReport rep;
  rep.cond_log_equalities = true;
  for (int i = 1; i <= d - 1; ++i) {
    if (seq.s[i] * seq.s[i] != seq.s[i - 1] * seq.s[i + 1])
      rep.cond_log_equalities = false;
  }
  rep.cond_power_equalities = true;
  for (int i = 0; i <= d; ++i) {
    if (pow_int(seq.s[i], d) !=
        pow_int(seq.s[0], d - i) * pow_int(seq.s[d], i))
      rep.cond_power_equalities = false;
  }
  rep.cond_endpoint =
      pow_int(seq.s[d - 1], d) == seq.s[0] * pow_int(seq.s[d], d - 1);
  rep.all_agree = rep.cond_log_equalities == rep.cond_power_equalities &&
                  rep.cond_power_equalities == rep.cond_endpoint;
  return rep;
}

}  // namespace nefcalc
