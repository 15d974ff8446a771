#ifndef NEFCALC_REPORT_HPP
#define NEFCALC_REPORT_HPP

#include <optional>
#include <vector>

#include <json.hpp>

#include "nefcalc/mixedvol.hpp"
#include "nefcalc/polytope.hpp"

namespace nefcalc {

// Report assembly shared by the C API and (through it) the CLI. Every
// report is deterministic: same inputs and flags give byte-identical JSON
// once serialized with sorted keys.

// Mixed volume of d bodies; for pairs the full intersection sequence is
// included. The sequence is computed by both algorithms (inclusion-
// exclusion polarization and evaluation/interpolation) and the report
// records both, so any oracle disagreement is diagnosable.
nlohmann::json report_mixedvol(const std::vector<Polytope>& bodies);

nlohmann::json report_sequence(const Polytope& p, const Polytope& q);

// Consolidated inequality verdicts for a free or realized sequence:
// log-concavity, the power inequalities, the equality-conditions
// equivalence and proportionality. "verdict" is "pass", "violation" or
// "undecided".
nlohmann::json report_verify(const NefSequence& seq, unsigned max_bits);

// Pair form: additionally runs the Minkowski superadditivity check and
// the geometric proportionality witness.
nlohmann::json report_verify(const Polytope& p, const Polytope& q,
                             unsigned max_bits);

// Radius bounds (and Diskant / Bonnesen when a slope or a pair is
// available) for a sequence; interval endpoints are exact rationals.
nlohmann::json report_bounds(const NefSequence& seq,
                             const std::optional<Rational>& slope_override,
                             const Polytope* p, const Polytope* q,
                             unsigned max_bits);

nlohmann::json report_radii(const Polytope& p, const Polytope& q);

// Exact identity between the t^1 coefficient of vol(P + tQ) and
// d * V(P^[d-1], Q).
nlohmann::json report_derivative(const Polytope& p, const Polytope& q);

}  // namespace nefcalc

#endif
