#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <string>

#include "nefcalc.h"

using nlohmann::json;

namespace {

const char* kSquare = R"({"dim": 2, "vertices":
    [["0/1","0/1"], ["1/1","0/1"], ["0/1","1/1"], ["1/1","1/1"]]})";
const char* kBigSquare = R"({"dim": 2, "vertices":
    [["0/1","0/1"], ["2/1","0/1"], ["0/1","2/1"], ["2/1","2/1"]]})";
const char* kTriangle = R"({"dim": 2, "vertices":
    [["0/1","0/1"], ["1/1","0/1"], ["0/1","1/1"]]})";

struct Poly {
  nef_polytope* h = nullptr;
  explicit Poly(const char* text) { REQUIRE(nef_polytope_parse(text, &h) == NEF_OK); }
  ~Poly() { nef_polytope_free(h); }
};

std::string take(char* s) {
  std::string out = s;
  nef_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("polytope parse, serialize and errors") {
  Poly sq(kSquare);
  char* text = nullptr;
  REQUIRE(nef_polytope_to_json(sq.h, &text) == NEF_OK);
  json j = json::parse(take(text));
  CHECK(j["dim"] == 2);
  CHECK(j["vertices"].size() == 4);

  nef_polytope* bad = nullptr;
  CHECK(nef_polytope_parse("{", &bad) == NEF_ERR_PARSE);
  CHECK(std::string(nef_last_error()).size() > 0);
  CHECK(nef_polytope_parse(nullptr, &bad) == NEF_ERR_NULL_ARGUMENT);
  CHECK(nef_polytope_parse(R"({"dim":2,"vertices":[[0.5,0.5]]})", &bad) ==
        NEF_ERR_PARSE);
}

TEST_CASE("sequence handles round trip") {
  nef_sequence* s = nullptr;
  REQUIRE(nef_sequence_parse(R"({"d":2,"s":["5","4","5"]})", &s) == NEF_OK);
  char* text = nullptr;
  REQUIRE(nef_sequence_to_json(s, &text) == NEF_OK);
  json j = json::parse(take(text));
  CHECK(j["d"] == 2);
  CHECK(j["s"][0] == "5/1");
  CHECK(j["realized"] == false);
  nef_sequence_free(s);
}

TEST_CASE("intersection sequence and mixed volume") {
  Poly sq(kSquare), big(kBigSquare);
  nef_sequence* s = nullptr;
  REQUIRE(nef_intersection_sequence(sq.h, big.h, &s) == NEF_OK);
  char* text = nullptr;
  REQUIRE(nef_sequence_to_json(s, &text) == NEF_OK);
  json j = json::parse(take(text));
  CHECK(j["s"] == json::array({"8/1", "4/1", "2/1"}));
  CHECK(j["realized"] == true);
  nef_sequence_free(s);

  const nef_polytope* pair[2] = {sq.h, big.h};
  char* rep = nullptr;
  REQUIRE(nef_mixed_volume(pair, 2, &rep) == NEF_OK);
  json m = json::parse(take(rep));
  CHECK(m["mixed_volume"] == "2/1");
  CHECK(m["sequence"]["provenance"]["agree"] == true);
}

TEST_CASE("verify reports verdicts") {
  Poly sq(kSquare), tr(kTriangle);
  char* rep = nullptr;
  REQUIRE(nef_verify_pair(sq.h, tr.h, 0, &rep) == NEF_OK);
  json j = json::parse(take(rep));
  CHECK(j["verdict"] == "pass");
  CHECK(j["minkowski"]["pass"] == true);

  nef_sequence* s = nullptr;
  REQUIRE(nef_sequence_parse(R"({"d":2,"s":["5","4","5"]})", &s) == NEF_OK);
  REQUIRE(nef_verify_sequence(s, 0, &rep) == NEF_OK);
  json v = json::parse(take(rep));
  CHECK(v["verdict"] == "violation");
  CHECK(v["log_concavity"]["pass"] == false);
  CHECK(v["log_concavity"]["entries"][0]["i"] == 1);
  nef_sequence_free(s);
}

TEST_CASE("bounds and radii golden values") {
  Poly sq(kSquare), tr(kTriangle);
  char* rep = nullptr;
  REQUIRE(nef_radii(sq.h, tr.h, &rep) == NEF_OK);
  json r = json::parse(take(rep));
  CHECK(r["t"] == "1/1");
  CHECK(r["R"] == "2/1");

  REQUIRE(nef_bounds_pair(sq.h, tr.h, nullptr, 0, &rep) == NEF_OK);
  json b = json::parse(take(rep));
  CHECK(b["verdict"] == "pass");
  CHECK(b["lp"]["r"] == "1/1");
  CHECK(b["diskant"]["deficit"]["lo"] == "1/1");
  CHECK(b["diskant"]["deficit"]["hi"] == "1/1");
  CHECK(b["inradius"]["upper"]["exact"] == "1/1");

  // slope override as exact rational text
  REQUIRE(nef_bounds_pair(sq.h, tr.h, "1/2", 0, &rep) == NEF_OK);
  json o = json::parse(take(rep));
  CHECK(o["diskant"]["slope"] == "1/2");

  // sequence-only bounds: the unrealizable input is a typed error
  nef_sequence* s = nullptr;
  REQUIRE(nef_sequence_parse(R"({"d":2,"s":["5","4","5"]})", &s) == NEF_OK);
  CHECK(nef_bounds_sequence(s, nullptr, 0, &rep) ==
        NEF_ERR_UNREALIZABLE_SEQUENCE);
  nef_sequence_free(s);
}

TEST_CASE("derivative identity") {
  Poly sq(kSquare), tr(kTriangle);
  char* rep = nullptr;
  REQUIRE(nef_derivative_check(sq.h, tr.h, &rep) == NEF_OK);
  json j = json::parse(take(rep));
  CHECK(j["equal"] == true);
  CHECK(j["t1_coefficient"] == "2/1");
}

TEST_CASE("generator is deterministic through the C API") {
  nef_polytope* a = nullptr;
  nef_polytope* b = nullptr;
  REQUIRE(nef_generate(7, 3, 8, 5, &a) == NEF_OK);
  REQUIRE(nef_generate(7, 3, 8, 5, &b) == NEF_OK);
  char* ja = nullptr;
  char* jb = nullptr;
  REQUIRE(nef_polytope_to_json(a, &ja) == NEF_OK);
  REQUIRE(nef_polytope_to_json(b, &jb) == NEF_OK);
  CHECK(take(ja) == take(jb));
  nef_polytope_free(a);
  nef_polytope_free(b);

  nef_polytope* bad = nullptr;
  CHECK(nef_generate(7, 9, 8, 0, &bad) == NEF_ERR_INVALID_INPUT);
}

TEST_CASE("reports are byte-identical across calls") {
  Poly sq(kSquare), tr(kTriangle);
  char* a = nullptr;
  char* b = nullptr;
  REQUIRE(nef_verify_pair(sq.h, tr.h, 0, &a) == NEF_OK);
  REQUIRE(nef_verify_pair(sq.h, tr.h, 0, &b) == NEF_OK);
  CHECK(take(a) == take(b));
}
