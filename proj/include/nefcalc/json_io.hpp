#ifndef NEFCALC_JSON_IO_HPP
#define NEFCALC_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "nefcalc/mixedvol.hpp"
#include "nefcalc/polytope.hpp"

namespace nefcalc {

// Polytope wire format:
//   {"dim": 2, "vertices": [["0/1","0/1"], ["1/1","0/1"], ...]}
// Coordinates must be "p/q" or integer strings; floats are rejected.
Polytope polytope_from_json(const nlohmann::json& j);
nlohmann::json polytope_to_json(const Polytope& p);

// Sequence wire format: {"d": 2, "s": ["8/1","4/1","2/1"], "realized": true}
NefSequence sequence_from_json(const nlohmann::json& j);
nlohmann::json sequence_to_json(const NefSequence& seq);

Polytope polytope_from_json_text(const std::string& text);
NefSequence sequence_from_json_text(const std::string& text);

// Coordinate parsing shared by both formats: strings only, exact.
Rational rational_from_json(const nlohmann::json& j);

}  // namespace nefcalc

#endif
