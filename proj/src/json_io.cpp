#include "nefcalc/json_io.hpp"

#include "nefcalc/errors.hpp"

namespace nefcalc {

Rational rational_from_json(const nlohmann::json& j) {
  if (!j.is_string())
    throw ParseError(
        "coordinates must be exact rational strings like \"1/2\"; "
        "got " + j.dump());
  return parse_rational(j.get<std::string>());
}

Polytope polytope_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
    throw ParseError("polytope JSON needs \"dim\" and \"vertices\"");
  if (!j["dim"].is_number_integer())
    throw ParseError("\"dim\" must be an integer");
  int dim = j["dim"].get<int>();
  if (!j["vertices"].is_array() || j["vertices"].empty())
    throw ParseError("\"vertices\" must be a nonempty array");
  std::vector<Vec> points;
  for (const auto& row : j["vertices"]) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw ParseError("each vertex must list exactly dim coordinates");
    Vec p;
    for (const auto& coord : row) p.push_back(rational_from_json(coord));
    points.push_back(std::move(p));
  }
  return Polytope::hull(points, dim);
}

nlohmann::json polytope_to_json(const Polytope& p) {
  nlohmann::json j;
  j["dim"] = p.dim();
  auto verts = nlohmann::json::array();
  for (const auto& v : p.vertices()) {
    auto row = nlohmann::json::array();
    for (const auto& c : v) row.push_back(format_rational(c));
    verts.push_back(std::move(row));
  }
  j["vertices"] = std::move(verts);
  return j;
}

NefSequence sequence_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("d") || !j.contains("s"))
    throw ParseError("sequence JSON needs \"d\" and \"s\"");
  if (!j["d"].is_number_integer())
    throw ParseError("\"d\" must be an integer");
  NefSequence seq;
  seq.degree = j["d"].get<int>();
  if (seq.degree < 1) throw ParseError("sequence degree must be >= 1");
  if (!j["s"].is_array() ||
      static_cast<int>(j["s"].size()) != seq.degree + 1)
    throw ParseError("\"s\" must list exactly d+1 values");
  for (const auto& entry : j["s"]) {
    Rational v = rational_from_json(entry);
    if (v < 0) throw ParseError("sequence entries must be nonnegative");
    seq.s.push_back(std::move(v));
  }
  seq.realized = j.value("realized", false);
  return seq;
}

nlohmann::json sequence_to_json(const NefSequence& seq) {
  nlohmann::json j;
  j["d"] = seq.degree;
  auto s = nlohmann::json::array();
  for (const auto& v : seq.s) s.push_back(format_rational(v));
  j["s"] = std::move(s);
  j["realized"] = seq.realized;
  return j;
}

Polytope polytope_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return polytope_from_json(j);
}

NefSequence sequence_from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return sequence_from_json(j);
}

}  // namespace nefcalc
