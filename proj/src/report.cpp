#include "nefcalc/report.hpp"

#include <string>

#include "nefcalc/bounds.hpp"
#include "nefcalc/errors.hpp"
#include "nefcalc/json_io.hpp"
#include "nefcalc/nefseq.hpp"
#include "nefcalc/radii.hpp"

namespace nefcalc {

namespace {

using nlohmann::json;

std::string fr(const Rational& v) { return format_rational(v); }

const char* cmp_name(Cmp c) {
  switch (c) {
    case Cmp::LT: return "LT";
    case Cmp::GT: return "GT";
    case Cmp::EQ: return "EQ";
    default: return "UNDECIDED";
  }
}

json rationals(const std::vector<Rational>& vs) {
  json arr = json::array();
  for (const auto& v : vs) arr.push_back(fr(v));
  return arr;
}

json interval_json(const std::optional<Interval>& iv) {
  if (!iv) return nullptr;
  return json{{"lo", fr(iv->lo)}, {"hi", fr(iv->hi)}};
}

// Certified value rendered as an enclosure plus, when available, its exact
// radical form.
json certified_json(const CertifiedReal& x, unsigned max_bits) {
  json out;
  out["enclosure"] = interval_json(enclose(x, max_bits));
  if (auto ex = x.exact()) {
    if (ex->is_rational()) {
      out["exact"] = fr(ex->coeff);
    } else {
      out["exact"] = json{{"coeff", fr(ex->coeff)},
                          {"base", fr(ex->base)},
                          {"exponent", std::to_string(ex->p) + "/" +
                                           std::to_string(ex->q)}};
    }
  }
  return out;
}

// Interpolation-side oracle: s_i = d! V(P^[i], Q^[d-i]) read off the
// volume polynomial vol(P + tQ) whose t^k coefficient is
// binom(d,k) V(P^[d-k], Q^[k]).
std::vector<Rational> sequence_by_interpolation(const Polytope& p,
                                                const Polytope& q) {
  int d = p.dim();
  auto coeffs = volume_polynomial(p, q);
  std::vector<Rational> s(d + 1);
  for (int i = 0; i <= d; ++i)
    s[i] = Rational(factorial(d)) * coeffs[d - i] / Rational(binomial(d, d - i));
  return s;
}

struct VerdictTracker {
  bool violation = false;
  json undecided = json::array();

  void check(bool pass, Cmp verdict, const std::string& name) {
    if (verdict == Cmp::UNDECIDED)
      undecided.push_back(name);
    else if (!pass)
      violation = true;
  }
  void check(bool pass) {
    if (!pass) violation = true;
  }
  void finish(json& rep) const {
    rep["undecided"] = undecided;
    rep["verdict"] = violation ? "violation"
                               : (undecided.empty() ? "pass" : "undecided");
  }
};

json log_concavity_json(const NefSequence& seq, VerdictTracker& tracker) {
  auto rep = check_log_concavity(seq);
  json entries = json::array();
  for (const auto& e : rep.entries) {
    entries.push_back(json{{"i", e.index},
                           {"deficit", fr(e.deficit)},
                           {"holds", e.holds},
                           {"equality", e.equality}});
    tracker.check(e.holds);
  }
  return json{{"pass", rep.pass}, {"entries", entries}};
}

json kt_power_json(const NefSequence& seq, VerdictTracker& tracker) {
  auto rep = check_kt_power(seq);
  json entries = json::array();
  for (const auto& e : rep.entries) {
    entries.push_back(json{{"i", e.index},
                           {"deficit", fr(e.deficit)},
                           {"holds", e.holds},
                           {"equality", e.equality}});
    tracker.check(e.holds);
  }
  return json{{"pass", rep.pass}, {"entries", entries}};
}

json proportionality_json(const ProportionalityResult& pr, unsigned max_bits) {
  json out;
  out["proportional"] = pr.proportional;
  if (pr.ratio) out["ratio"] = certified_json(*pr.ratio, max_bits);
  if (pr.witness_checked) {
    out["witness_checked"] = true;
    out["witness_ok"] = pr.witness_ok;
    if (pr.lambda) out["lambda"] = fr(*pr.lambda);
  }
  return out;
}

json verify_core(const NefSequence& seq, unsigned max_bits,
                 VerdictTracker& tracker) {
  json rep;
  rep["input"] = sequence_to_json(seq);
  rep["log_concavity"] = log_concavity_json(seq, tracker);
  rep["power"] = kt_power_json(seq, tracker);
  if (seq.beta_big() && seq.alpha_big()) {
    auto eq = check_equality_conditions(seq);
    rep["equality_conditions"] = json{
        {"log_equalities", eq.cond_log_equalities},
        {"power_equalities", eq.cond_power_equalities},
        {"endpoint", eq.cond_endpoint},
        {"all_agree", eq.all_agree}};
    tracker.check(eq.all_agree);
    rep["proportionality"] =
        proportionality_json(proportionality_test(seq), max_bits);
  } else {
    rep["equality_conditions"] = json{{"skipped", "a class is not big"}};
  }
  return rep;
}

}  // namespace

json report_sequence(const Polytope& p, const Polytope& q) {
  NefSequence seq = intersection_sequence(p, q);
  std::vector<Rational> interp = sequence_by_interpolation(p, q);
  json rep = sequence_to_json(seq);
  rep["provenance"] = json{{"polarization", rationals(seq.s)},
                           {"interpolation", rationals(interp)},
                           {"agree", interp == seq.s}};
  return rep;
}

json report_mixedvol(const std::vector<Polytope>& bodies) {
  if (bodies.empty()) throw InvalidInput("mixed volume needs d bodies");
  int d = bodies.front().dim();
  for (const auto& b : bodies)
    if (b.dim() != d)
      throw InvalidInput("mixed volume arguments must share one dimension");
  if (static_cast<int>(bodies.size()) != d)
    throw InvalidInput("mixed volume in dimension " + std::to_string(d) +
                       " needs exactly " + std::to_string(d) + " bodies");
  json rep;
  rep["dim"] = d;
  rep["mixed_volume"] = fr(mixed_volume(bodies));
  if (bodies.size() == 2)
    rep["sequence"] = report_sequence(bodies[0], bodies[1]);
  return rep;
}

json report_verify(const NefSequence& seq, unsigned max_bits) {
  VerdictTracker tracker;
  json rep = verify_core(seq, max_bits, tracker);
  tracker.finish(rep);
  return rep;
}

json report_verify(const Polytope& p, const Polytope& q, unsigned max_bits) {
  NefSequence seq = intersection_sequence(p, q);
  VerdictTracker tracker;
  json rep = verify_core(seq, max_bits, tracker);
  rep["sequence"] = report_sequence(p, q);
  tracker.check(rep["sequence"]["provenance"]["agree"].get<bool>());

  auto mink = check_minkowski(p, q, max_bits);
  rep["minkowski"] = json{{"verdict", cmp_name(mink.verdict)},
                          {"pass", mink.pass},
                          {"equality", mink.equality},
                          {"expansion_identity", mink.expansion_identity},
                          {"sum_volume_scaled", fr(mink.sum_volume_scaled)},
                          {"bits_used", mink.bits_used}};
  tracker.check(mink.pass, mink.verdict, "minkowski");
  tracker.check(mink.expansion_identity);

  if (seq.beta_big() && seq.alpha_big())
    rep["proportionality"] =
        proportionality_json(proportionality_test(seq, p, q), max_bits);
  tracker.finish(rep);
  return rep;
}

json report_bounds(const NefSequence& seq,
                   const std::optional<Rational>& slope_override,
                   const Polytope* p, const Polytope* q, unsigned max_bits) {
  VerdictTracker tracker;
  json rep;
  rep["input"] = sequence_to_json(seq);

  RadiusBounds in = inradius_bounds(seq);
  RadiusBounds out = outradius_bounds(seq);
  rep["inradius"] = json{{"lower", certified_json(in.lower, max_bits)},
                         {"upper", certified_json(in.upper, max_bits)}};
  rep["outradius"] = json{{"lower", certified_json(out.lower, max_bits)},
                          {"upper", certified_json(out.upper, max_bits)}};

  std::optional<Rational> slope_val = slope_override;
  std::optional<RadiiResult> rin, rout;
  if (p && q) {
    rin = inradius(*p, *q);
    rout = outradius(*p, *q);
    rep["lp"] = json{{"r", fr(rin->t_star)}, {"R", fr(rout->t_star)}};
    if (!slope_val) slope_val = rin->t_star;
  }

  if (slope_val) {
    DiskantResult dk = diskant_check(seq, *slope_val, max_bits);
    rep["diskant"] = json{{"slope", fr(*slope_val)},
                          {"lhs", certified_json(dk.lhs, max_bits)},
                          {"rhs", certified_json(dk.rhs, max_bits)},
                          {"verdict", cmp_name(dk.verdict)},
                          {"pass", dk.pass},
                          {"exact_tie", dk.exact_tie},
                          {"deficit", interval_json(dk.deficit)},
                          {"bits_used", dk.bits_used}};
    tracker.check(dk.pass, dk.verdict, "diskant");
  }

  if (rin && rout && seq.degree == 2) {
    auto bn = bonnesen_check(seq, CertifiedReal(rin->t_star),
                             CertifiedReal(rout->t_star), max_bits);
    rep["bonnesen"] = json{{"lhs", interval_json(bn.lhs)},
                           {"rhs", fr(bn.rhs)},
                           {"verdict", cmp_name(bn.verdict)},
                           {"pass", bn.pass},
                           {"exact_tie", bn.exact_tie},
                           {"bits_used", bn.bits_used}};
    tracker.check(bn.pass, bn.verdict, "bonnesen");
  }
  tracker.finish(rep);
  return rep;
}

json report_radii(const Polytope& p, const Polytope& q) {
  RadiiResult in = inradius(p, q);
  RadiiResult out = outradius(p, q);
  json x = json::array();
  for (const auto& c : in.translation) x.push_back(fr(c));
  json dual = json::array();
  for (const auto& m : in.dual_certificate) dual.push_back(fr(m));
  return json{{"t", fr(in.t_star)},
              {"x", x},
              {"R", fr(out.t_star)},
              {"active_facets", in.active_facets},
              {"dual_certificate", dual}};
}

json report_derivative(const Polytope& p, const Polytope& q) {
  int d = p.dim();
  if (q.dim() != d) throw InvalidInput("dimension mismatch");
  auto coeffs = volume_polynomial(p, q);
  std::vector<Polytope> args(static_cast<std::size_t>(d > 0 ? d - 1 : 0), p);
  args.push_back(q);
  Rational directional = Rational(d) * mixed_volume(args);
  return json{{"t1_coefficient", fr(coeffs[1])},
              {"directional", fr(directional)},
              {"equal", coeffs[1] == directional}};
}

}  // namespace nefcalc
