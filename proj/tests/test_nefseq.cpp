#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nefcalc/errors.hpp"
#include "nefcalc/generator.hpp"
#include "nefcalc/nefseq.hpp"
#include "test_util.hpp"

using namespace nefcalc;
using testutil::make;

namespace {

NefSequence seq_of(std::initializer_list<long> vals, bool realized = false) {
  NefSequence s;
  for (long v : vals) s.s.push_back(Rational(v));
  s.degree = static_cast<int>(s.s.size()) - 1;
  s.realized = realized;
  return s;
}

}  // namespace

TEST_CASE("log-concavity holds on realized sequences") {
  for (int i = 0; i < 10; ++i) {
    int dim = 2 + i % 3;
    Polytope a = random_polytope(91, dim, 8, 2 * i);
    Polytope b = random_polytope(91, dim, 8, 2 * i + 1);
    NefSequence s = intersection_sequence(a, b);
    auto rep = check_log_concavity(s);
    CHECK(rep.pass);
    REQUIRE(static_cast<int>(rep.entries.size()) == dim - 1);
    for (const auto& e : rep.entries) {
      CHECK(e.holds);
      CHECK(e.deficit == s.s[e.index] * s.s[e.index] -
                             s.s[e.index - 1] * s.s[e.index + 1]);
      CHECK(e.deficit >= 0);
    }
  }
}

TEST_CASE("the free sequence (5,4,5) fails log-concavity at i=1") {
  NefSequence s = seq_of({5, 4, 5});
  auto rep = check_log_concavity(s);
  CHECK_FALSE(rep.pass);
  REQUIRE(rep.entries.size() == 1);
  CHECK(rep.entries[0].index == 1);
  CHECK_FALSE(rep.entries[0].holds);
  CHECK(rep.entries[0].deficit == -9);

  auto pw = check_kt_power(s);
  CHECK_FALSE(pw.pass);
  REQUIRE(pw.entries.size() == 3);  // indices 0..d, endpoints trivially tie
  CHECK(pw.entries[1].deficit == 16 - 25);
  CHECK_FALSE(pw.entries[1].holds);
}

TEST_CASE("power inequalities hold on realized sequences with deficits") {
  NefSequence s = intersection_sequence(testutil::unit_square(),
                                        testutil::standard_triangle());
  // s = (1, 2, 2): s_1^2 = 4 >= s_0 s_2 = 2
  auto rep = check_kt_power(s);
  CHECK(rep.pass);
  REQUIRE(rep.entries.size() == 3);
  CHECK(rep.entries[0].equality);
  CHECK(rep.entries[1].deficit == 2);
  CHECK_FALSE(rep.entries[1].equality);
  CHECK(rep.entries[2].equality);
}

TEST_CASE("homothetic pairs make every inequality an equality") {
  for (int i = 0; i < 6; ++i) {
    int dim = 2 + i % 2;
    Polytope p = random_polytope(101, dim, 7, i);
    Polytope q = random_homothety(p, 103, i);
    NefSequence s = intersection_sequence(p, q);
    auto lc = check_log_concavity(s);
    auto pw = check_kt_power(s);
    CHECK(lc.pass);
    CHECK(pw.pass);
    for (const auto& e : lc.entries) CHECK(e.equality);
    for (const auto& e : pw.entries) CHECK(e.equality);
    auto eq = check_equality_conditions(s);
    CHECK(eq.cond_log_equalities);
    CHECK(eq.cond_power_equalities);
    CHECK(eq.cond_endpoint);
    CHECK(eq.all_agree);
  }
}

TEST_CASE("equality conditions agree on generic pairs too") {
  for (int i = 0; i < 10; ++i) {
    int dim = 2 + i % 3;
    Polytope a = random_polytope(111, dim, 8, 2 * i);
    Polytope b = random_polytope(111, dim, 8, 2 * i + 1);
    auto eq = check_equality_conditions(intersection_sequence(a, b));
    CHECK(eq.all_agree);
    // generic pairs are essentially never homothetic
    CHECK(eq.cond_log_equalities == eq.cond_endpoint);
  }
}

TEST_CASE("equality conditions require big classes") {
  CHECK_THROWS_AS(check_equality_conditions(seq_of({0, 1, 2})), NotBig);
  CHECK_THROWS_AS(check_equality_conditions(seq_of({2, 1, 0})), NotBig);
}

TEST_CASE("Minkowski-style superadditivity of volume roots") {
  for (int i = 0; i < 8; ++i) {
    int dim = 2 + i % 2;
    Polytope a = random_polytope(121, dim, 7, 2 * i);
    Polytope b = random_polytope(121, dim, 7, 2 * i + 1);
    auto rep = check_minkowski(a, b, 4096);
    CHECK(rep.pass);
    CHECK(rep.expansion_identity);
    NefSequence s = intersection_sequence(a, b);
    Rational expect = 0;
    for (int k = 0; k <= dim; ++k)
      expect += Rational(binomial(dim, k)) * s.s[k];
    CHECK(rep.sum_volume_scaled == expect);
  }
}

TEST_CASE("Minkowski equality holds exactly for homothets") {
  Polytope p = make({{0, 0}, {3, 0}, {0, 3}, {3, 3}}, 2);
  Polytope q = p.scaled(Rational(5, 3)).translated({Rational(1), Rational(2)});
  auto rep = check_minkowski(p, q, 4096);
  CHECK(rep.pass);
  CHECK(rep.equality);
  CHECK(rep.verdict == Cmp::EQ);
}

TEST_CASE("Minkowski inequality is strict for non-homothetic pairs") {
  auto rep = check_minkowski(testutil::unit_square(),
                             testutil::standard_triangle(), 4096);
  CHECK(rep.pass);
  CHECK_FALSE(rep.equality);
  CHECK(rep.verdict == Cmp::GT);
}
