#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nefcalc/errors.hpp"
#include "nefcalc/generator.hpp"
#include "nefcalc/json_io.hpp"
#include "test_util.hpp"

using namespace nefcalc;
using nlohmann::json;
using testutil::pt;

TEST_CASE("polytope round trip") {
  const char* text = R"({"dim": 2, "vertices":
      [["0/1","0/1"], ["1/1","0/1"], ["0/1","1/1"], ["1/1","1/1"]]})";
  Polytope p = polytope_from_json_text(text);
  CHECK(p == testutil::unit_square());
  json j = polytope_to_json(p);
  CHECK(j["dim"] == 2);
  CHECK(j["vertices"].size() == 4);
  CHECK(j["vertices"][0][0].get<std::string>() == "0/1");
  CHECK(polytope_from_json(j) == p);
}

TEST_CASE("random polytopes survive the wire format") {
  for (int i = 0; i < 10; ++i) {
    int dim = 2 + i % 3;
    Polytope p = random_polytope(211, dim, 8, i);
    CHECK(polytope_from_json(polytope_to_json(p)) == p);
  }
}

TEST_CASE("integer strings and negative rationals parse") {
  Polytope p = polytope_from_json_text(
      R"({"dim": 2, "vertices": [["-1/2","0"], ["3","0"], ["0","7/3"]]})");
  CHECK(p.vertices().size() == 3);
  CHECK(p.support(pt({-1, 0})) == Rational(1, 2));
}

TEST_CASE("floats and malformed coordinates are rejected") {
  CHECK_THROWS_AS(polytope_from_json_text(
                      R"({"dim": 2, "vertices": [[0.5, 0.5], [1, 0], [0, 1]]})"),
                  ParseError);
  CHECK_THROWS_AS(polytope_from_json_text(
                      R"({"dim": 2, "vertices": [["0.5","0"], ["1","0"], ["0","1"]]})"),
                  ParseError);
  CHECK_THROWS_AS(polytope_from_json_text(
                      R"({"dim": 2, "vertices": [["1/0","0"], ["1","0"], ["0","1"]]})"),
                  ParseError);
  CHECK_THROWS_AS(polytope_from_json_text(
                      R"({"dim": 2, "vertices": [["a","0"], ["1","0"], ["0","1"]]})"),
                  ParseError);
}

TEST_CASE("structural errors are rejected") {
  CHECK_THROWS_AS(polytope_from_json_text("not json"), ParseError);
  CHECK_THROWS_AS(polytope_from_json_text(R"({"vertices": []})"), ParseError);
  CHECK_THROWS_AS(polytope_from_json_text(R"({"dim": 2, "vertices": []})"),
                  ParseError);
  // wrong coordinate count
  CHECK_THROWS_AS(polytope_from_json_text(
                      R"({"dim": 2, "vertices": [["0","0","0"]]})"),
                  ParseError);
  CHECK_THROWS_AS(polytope_from_json_text(R"({"dim": 0, "vertices": [[]]})"),
                  InvalidInput);
}

TEST_CASE("sequence round trip and defaults") {
  NefSequence s = sequence_from_json_text(
      R"({"d": 2, "s": ["8/1","4/1","2/1"], "realized": true})");
  CHECK(s.degree == 2);
  CHECK(s.s == std::vector<Rational>{8, 4, 2});
  CHECK(s.realized);
  json j = sequence_to_json(s);
  CHECK(j["d"] == 2);
  CHECK(j["s"][0].get<std::string>() == "8/1");
  CHECK(j["realized"] == true);

  NefSequence f = sequence_from_json_text(R"({"d": 2, "s": ["5","4","5"]})");
  CHECK_FALSE(f.realized);  // free unless stated
}

TEST_CASE("sequence validation") {
  CHECK_THROWS_AS(sequence_from_json_text(R"({"d": 2, "s": ["1","2"]})"),
                  ParseError);
  CHECK_THROWS_AS(sequence_from_json_text(R"({"d": 0, "s": ["1"]})"),
                  ParseError);
  CHECK_THROWS_AS(sequence_from_json_text(R"({"d": 2, "s": ["1","-2","1"]})"),
                  ParseError);
  CHECK_THROWS_AS(sequence_from_json_text(R"({"d": 2, "s": [1, 2, 2]})"),
                  ParseError);
}

TEST_CASE("emitted rationals are always p/q in lowest terms") {
  json j = polytope_to_json(testutil::unit_square().scaled(Rational(2, 4)));
  for (const auto& v : j["vertices"])
    for (const auto& c : v) {
      std::string s = c.get<std::string>();
      CHECK(s.find('/') != std::string::npos);
    }
  CHECK(j["vertices"][3][0].get<std::string>() == "1/2");
}
