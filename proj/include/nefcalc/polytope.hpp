#ifndef NEFCALC_POLYTOPE_HPP
#define NEFCALC_POLYTOPE_HPP

#include <vector>

#include "nefcalc/linalg.hpp"
#include "nefcalc/rational.hpp"

namespace nefcalc {

// One face of the irredundant H-representation: <x, normal> <= offset.
// Normals are primitive integer vectors (stored as Rationals), outward.
struct Facet {
  Vec normal;
  Rational offset;
  std::vector<int> vertex_ids;            // vertices lying on the facet
  std::vector<std::vector<int>> simplices;  // triangulation of the facet,
                                            // d vertex ids per simplex
};

// Bounded convex rational polytope, the model of a nef class. Immutable
// after construction; every operation returns a fresh value.
class Polytope {
 public:
  // Convex hull of a point set. Lower-dimensional input is legal and
  // recorded via affine_dim(); such polytopes carry no H-representation.
  static Polytope hull(const std::vector<Vec>& points, int dim);

  int dim() const { return dim_; }
  int affine_dim() const { return aff_dim_; }
  bool full_dimensional() const { return aff_dim_ == dim_; }

  const std::vector<Vec>& vertices() const { return vertices_; }
  const std::vector<Facet>& facets() const { return facets_; }

  Rational support(const Vec& direction) const;
  std::vector<Vec> normal_directions() const;  // throws DegenerateInput

  bool contains(const Vec& point) const;  // full-dimensional only
  bool contains(const Polytope& other) const;

  Polytope minkowski_sum(const Polytope& other) const;
  Polytope scaled(const Rational& t) const;  // t >= 0; t = 0 gives {0}
  Polytope translated(const Vec& x) const;

  bool operator==(const Polytope& other) const;

 private:
  Polytope() = default;

  int dim_ = 0;
  int aff_dim_ = 0;
  std::vector<Vec> vertices_;  // minimal V-rep, lexicographically sorted
  std::vector<Facet> facets_;  // empty when not full-dimensional
};

}  // namespace nefcalc

#endif
