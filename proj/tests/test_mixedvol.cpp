#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "nefcalc/errors.hpp"
#include "nefcalc/generator.hpp"
#include "nefcalc/mixedvol.hpp"
#include "test_util.hpp"

using namespace nefcalc;
using testutil::make;
using testutil::pt;

namespace {

// Independent d=2 oracle: twice the mixed area equals the sum over the
// edges of Q of (edge length along its direction) * h_P(outer normal),
// i.e. 2 V(P,Q) = sum_F h_P(u_F) * |F|_lattice-free form. We use the
// equivalent polygon formula 2V(P,Q) = area(P+Q) - area(P) - area(Q).
Rational mixed_area_by_sum(const Polytope& p, const Polytope& q) {
  return (volume(p.minkowski_sum(q)) - volume(p) - volume(q)) / 2;
}

}  // namespace

TEST_CASE("volume golden values") {
  CHECK(volume(testutil::unit_square()) == 1);
  CHECK(volume(testutil::standard_triangle()) == Rational(1, 2));
  CHECK(volume(testutil::unit_cube()) == 1);
  for (int d = 2; d <= 4; ++d)
    CHECK(volume(testutil::simplex(d)) == Rational(1) / Rational(factorial(d)));
  // degenerate polytopes have volume zero
  CHECK(volume(make({{0, 0}, {3, 0}}, 2)) == 0);
}

TEST_CASE("volume is translation invariant and degree-d homogeneous") {
  for (int i = 0; i < 10; ++i) {
    int dim = 2 + i % 3;
    Polytope p = random_polytope(21, dim, 8, i);
    Vec shift(dim, Rational(-7, 3));
    CHECK(volume(p.translated(shift)) == volume(p));
    Rational t(5, 2);
    CHECK(volume(p.scaled(t)) == pow_int(t, dim) * volume(p));
  }
}

TEST_CASE("mixed volume reduces to volume on equal arguments") {
  for (int i = 0; i < 6; ++i) {
    int dim = 2 + i % 3;
    Polytope p = random_polytope(31, dim, 7, i);
    std::vector<Polytope> args(dim, p);
    CHECK(mixed_volume(args) == volume(p));
  }
}

TEST_CASE("mixed volume is symmetric and multilinear") {
  for (int i = 0; i < 5; ++i) {
    Polytope a = random_polytope(41, 3, 6, 3 * i);
    Polytope b = random_polytope(41, 3, 6, 3 * i + 1);
    Polytope c = random_polytope(41, 3, 6, 3 * i + 2);
    Rational v = mixed_volume({a, b, c});
    CHECK(mixed_volume({b, a, c}) == v);
    CHECK(mixed_volume({c, b, a}) == v);
    // linearity in the first slot: V(a + a', b, c) = V(a,b,c) + V(a',b,c)
    Polytope a2 = random_polytope(43, 3, 6, i);
    CHECK(mixed_volume({a.minkowski_sum(a2), b, c}) ==
          v + mixed_volume({a2, b, c}));
    // homogeneity in one slot
    Rational t(7, 4);
    CHECK(mixed_volume({a.scaled(t), b, c}) == t * v);
  }
}

TEST_CASE("mixed volume is monotone and nonnegative") {
  for (int i = 0; i < 6; ++i) {
    int dim = 2 + i % 2;
    Polytope a = random_polytope(51, dim, 7, 2 * i);
    Polytope b = random_polytope(51, dim, 7, 2 * i + 1);
    std::vector<Polytope> args;
    for (int k = 0; k < dim; ++k) args.push_back(k % 2 ? a : b);
    Rational v = mixed_volume(args);
    CHECK(v >= 0);
    // enlarging one argument cannot decrease the mixed volume
    args[0] = args[0].minkowski_sum(random_polytope(53, dim, 6, i));
    CHECK(mixed_volume(args) >= v);
  }
}

TEST_CASE("d=2 mixed area agrees with the polygon oracle") {
  for (int i = 0; i < 12; ++i) {
    Polytope a = random_polytope(61, 2, 8, 2 * i);
    Polytope b = random_polytope(61, 2, 8, 2 * i + 1);
    CHECK(mixed_volume({a, b}) == mixed_area_by_sum(a, b));
  }
}

TEST_CASE("volume polynomial matches polarization exactly") {
  for (int i = 0; i < 8; ++i) {
    int dim = 2 + i % 3;
    Polytope p = random_polytope(71, dim, 7, 2 * i);
    Polytope q = random_polytope(71, dim, 7, 2 * i + 1);
    auto coeffs = volume_polynomial(p, q);
    REQUIRE(static_cast<int>(coeffs.size()) == dim + 1);
    // vol(P + tQ) = sum_i binom(d,i) V(P^[d-i], Q^[i]) t^i
    for (int k = 0; k <= dim; ++k) {
      std::vector<Polytope> args;
      for (int j = 0; j < dim - k; ++j) args.push_back(p);
      for (int j = 0; j < k; ++j) args.push_back(q);
      CHECK(coeffs[k] == Rational(binomial(dim, k)) * mixed_volume(args));
    }
    CHECK(coeffs[0] == volume(p));
    CHECK(coeffs[dim] == volume(q));
  }
}

TEST_CASE("intersection sequence golden values") {
  Polytope sq = testutil::unit_square();

  NefSequence s = intersection_sequence(sq, sq.scaled(Rational(2)));
  REQUIRE(s.degree == 2);
  CHECK(s.s == std::vector<Rational>{8, 4, 2});
  CHECK(s.realized);
  CHECK(s.alpha_big());
  CHECK(s.beta_big());

  NefSequence t = intersection_sequence(sq, testutil::standard_triangle());
  CHECK(t.s == std::vector<Rational>{1, 2, 2});

  // s_d = d! vol(P), s_0 = d! vol(Q)
  Polytope cu = testutil::unit_cube();
  NefSequence c = intersection_sequence(cu, testutil::simplex(3));
  REQUIRE(c.degree == 3);
  CHECK(c.s[3] == 6 * volume(cu));
  CHECK(c.s[0] == 6 * volume(testutil::simplex(3)));
}

TEST_CASE("sequence reversal swaps the roles of the pair") {
  Polytope a = random_polytope(81, 3, 7, 0);
  Polytope b = random_polytope(81, 3, 7, 1);
  NefSequence ab = intersection_sequence(a, b);
  NefSequence ba = intersection_sequence(b, a);
  CHECK(ab.reversed().s == ba.s);
  CHECK(ab.reversed().degree == ab.degree);
}

TEST_CASE("degenerate arguments are allowed and give zero endpoints") {
  Polytope seg = make({{0, 0}, {1, 0}}, 2);
  NefSequence s = intersection_sequence(seg, testutil::unit_square());
  CHECK(s.s[2] == 0);   // alpha not big
  CHECK(s.s[0] == 2);
  CHECK_FALSE(s.alpha_big());
  // V(seg, square) = half the perimeter contribution: area(seg+sq)-1 = 1, /2
  CHECK(s.s[1] == 2 * mixed_volume({seg, testutil::unit_square()}));
}

TEST_CASE("factorial and binomial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(6, 0) == 1);
  CHECK(binomial(6, 6) == 1);
}
