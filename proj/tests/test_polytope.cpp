#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "nefcalc/errors.hpp"
#include "nefcalc/generator.hpp"
#include "nefcalc/polytope.hpp"
#include "test_util.hpp"

using namespace nefcalc;
using testutil::make;
using testutil::pt;

TEST_CASE("hull drops interior and boundary-redundant points") {
  std::vector<Vec> pts = {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})};
  Vec mid = {Rational(1) / 2, Rational(1) / 2};
  pts.push_back(mid);
  Polytope p = Polytope::hull(pts, 2);
  CHECK(p.vertices().size() == 4);
  CHECK(p.facets().size() == 4);
  CHECK(p.full_dimensional());

  // midpoint of an edge is not a vertex either
  pts.push_back({Rational(1) / 2, Rational(0)});
  CHECK(Polytope::hull(pts, 2).vertices().size() == 4);
}

TEST_CASE("hull of a simplex") {
  Polytope t = make({{0, 0}, {2, 0}, {0, 2}}, 2);
  CHECK(t.vertices().size() == 3);
  CHECK(t.facets().size() == 3);
}

TEST_CASE("collinear points give a degenerate polytope") {
  Polytope seg = make({{0, 0}, {1, 0}, {2, 0}}, 2);
  CHECK(seg.affine_dim() == 1);
  CHECK_FALSE(seg.full_dimensional());
  CHECK(seg.vertices().size() == 2);  // midpoint dropped
  CHECK_THROWS_AS(seg.normal_directions(), DegenerateInput);
}

TEST_CASE("empty input rejected") {
  CHECK_THROWS_AS(Polytope::hull({}, 2), InvalidInput);
}

TEST_CASE("unit square H-representation") {
  Polytope sq = testutil::unit_square();
  auto normals = sq.normal_directions();
  std::sort(normals.begin(), normals.end());
  std::vector<Vec> expected = {pt({-1, 0}), pt({0, -1}), pt({0, 1}),
                               pt({1, 0})};
  std::sort(expected.begin(), expected.end());
  CHECK(normals == expected);
  // scaling leaves the normal set unchanged
  auto scaled_normals = sq.scaled(Rational(2)).normal_directions();
  std::sort(scaled_normals.begin(), scaled_normals.end());
  CHECK(scaled_normals == expected);
}

TEST_CASE("standard triangle normals") {
  auto normals = testutil::standard_triangle().normal_directions();
  std::sort(normals.begin(), normals.end());
  std::vector<Vec> expected = {pt({-1, 0}), pt({0, -1}), pt({1, 1})};
  std::sort(expected.begin(), expected.end());
  CHECK(normals == expected);
}

TEST_CASE("support function basics") {
  Polytope sq = testutil::unit_square();
  CHECK(sq.support(pt({1, 1})) == 2);
  CHECK(sq.support(pt({0, -1})) == 0);
  CHECK(testutil::standard_triangle().support(pt({1, 1})) == 1);
}

TEST_CASE("minkowski sum identities") {
  Polytope sq = testutil::unit_square();
  Polytope two = sq.minkowski_sum(sq);
  CHECK(two == sq.scaled(Rational(2)));

  Polytope origin = Polytope::hull({pt({0, 0})}, 2);
  CHECK(sq.minkowski_sum(origin) == sq);

  Polytope penta = sq.minkowski_sum(testutil::standard_triangle());
  CHECK(penta.vertices().size() == 5);

  Polytope cube = testutil::unit_cube();
  CHECK_THROWS_AS(sq.minkowski_sum(cube), InvalidInput);
}

TEST_CASE("scale edge cases") {
  Polytope sq = testutil::unit_square();
  CHECK(sq.scaled(Rational(1)) == sq);
  Polytope zero = sq.scaled(Rational(0));
  CHECK(zero.affine_dim() == 0);
  CHECK(zero.vertices()[0] == pt({0, 0}));
  CHECK_THROWS_AS(sq.scaled(Rational(-1)), InvalidInput);
}

TEST_CASE("vertex/facet consistency on random polytopes") {
  for (int i = 0; i < 25; ++i) {
    int dim = 2 + i % 3;
    Polytope p = random_polytope(7, dim, 8, i);
    // every vertex satisfies every facet; each facet is supported by >= d
    // affinely independent vertices
    for (const auto& f : p.facets()) {
      int on = 0;
      for (const auto& v : p.vertices()) {
        Rational lhs = dot(f.normal, v);
        CHECK(lhs <= f.offset);
        if (lhs == f.offset) ++on;
      }
      CHECK(on >= dim);
      CHECK(static_cast<int>(f.vertex_ids.size()) == on);
    }
    // round trip: hull of the vertex set reproduces the polytope
    CHECK(Polytope::hull(p.vertices(), dim) == p);
    // no vertex is redundant
    for (std::size_t k = 0; k < p.vertices().size(); ++k) {
      std::vector<Vec> rest;
      for (std::size_t j = 0; j < p.vertices().size(); ++j)
        if (j != k) rest.push_back(p.vertices()[j]);
      Polytope sub = Polytope::hull(rest, dim);
      bool inside = sub.full_dimensional() && sub.contains(p.vertices()[k]);
      CHECK_FALSE(inside);
    }
  }
}

TEST_CASE("minkowski sum is commutative and associative") {
  for (int i = 0; i < 8; ++i) {
    Polytope a = random_polytope(11, 2, 6, 3 * i);
    Polytope b = random_polytope(11, 2, 6, 3 * i + 1);
    Polytope c = random_polytope(11, 2, 6, 3 * i + 2);
    CHECK(a.minkowski_sum(b) == b.minkowski_sum(a));
    CHECK(a.minkowski_sum(b).minkowski_sum(c) ==
          a.minkowski_sum(b.minkowski_sum(c)));
  }
}

TEST_CASE("support is additive under sums and homogeneous under scaling") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 10; ++i) {
    int dim = 2 + i % 2;
    Polytope a = random_polytope(13, dim, 7, 2 * i);
    Polytope b = random_polytope(13, dim, 7, 2 * i + 1);
    Polytope sum = a.minkowski_sum(b);
    Vec u(dim);
    for (int c = 0; c < dim; ++c)
      u[c] = Rational(static_cast<long>(rng() % 19) - 9);
    CHECK(sum.support(u) == a.support(u) + b.support(u));
    Rational t(3, 2);
    CHECK(a.scaled(t).support(u) == t * a.support(u));
  }
}
