#ifndef NEFCALC_GENERATOR_HPP
#define NEFCALC_GENERATOR_HPP

#include <cstdint>

#include "nefcalc/polytope.hpp"

namespace nefcalc {

// Deterministic random full-dimensional polytopes for property campaigns.
// The same (seed, dim, max_vertices, index) always yields the same
// polytope, across platforms: the stream is mt19937_64 with hand-rolled
// bounded draws (no distribution objects, whose output is
// implementation-defined).
Polytope random_polytope(std::uint64_t seed, int dim, int max_vertices,
                         int index);

// Q = lambda * P + x with small random rational lambda > 0 and shift x.
Polytope random_homothety(const Polytope& p, std::uint64_t seed, int index,
                          Rational* lambda_out = nullptr);

}  // namespace nefcalc

#endif
