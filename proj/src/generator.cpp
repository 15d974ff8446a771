#include "nefcalc/generator.hpp"

#include <random>

#include "nefcalc/errors.hpp"

namespace nefcalc {

namespace {

// Unbiased bounded draw on top of the fully specified mt19937_64 stream.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) {
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % n;
}

Rational draw_coord(std::mt19937_64& rng) {
  // Small integers with occasional halves/thirds keep downstream
  // arithmetic fast while still exercising non-integer input.
  long num = static_cast<long>(draw(rng, 21)) - 10;
  static const long dens[] = {1, 1, 1, 2, 3};
  long den = dens[draw(rng, 5)];
  return Rational(num) / Rational(den);
}

}  // namespace

Polytope random_polytope(std::uint64_t seed, int dim, int max_vertices,
                         int index) {
  if (dim < 1 || dim > 4)
    throw InvalidInput("generator supports dimensions 1 through 4");
  if (max_vertices < dim + 1)
    throw InvalidInput("need at least dim+1 candidate vertices");
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  for (;;) {
    int count = dim + 1 + static_cast<int>(draw(rng, max_vertices - dim));
    std::vector<Vec> pts;
    for (int i = 0; i < count; ++i) {
      Vec p(dim);
      for (int c = 0; c < dim; ++c) p[c] = draw_coord(rng);
      pts.push_back(std::move(p));
    }
    Polytope poly = Polytope::hull(pts, dim);
    if (poly.full_dimensional()) return poly;  // else resample
  }
}

Polytope random_homothety(const Polytope& p, std::uint64_t seed, int index,
                          Rational* lambda_out) {
  std::mt19937_64 rng(seed ^ (0xbf58476d1ce4e5b9ULL * (index + 1)));
  Rational lambda = Rational(1 + static_cast<long>(draw(rng, 6))) /
                    Rational(1 + static_cast<long>(draw(rng, 4)));
  Vec x(p.dim());
  for (int c = 0; c < p.dim(); ++c) x[c] = draw_coord(rng);
  if (lambda_out) *lambda_out = lambda;
  return p.scaled(lambda).translated(x);
}

}  // namespace nefcalc
