#include "nefcalc/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "nefcalc/errors.hpp"

namespace nefcalc {

namespace {

// Gift wrapping with full supporting-face handling. Facets are discovered
// as supporting hyperplanes; the point set on each hyperplane is hulled
// recursively one dimension down, which yields the facet's vertex set, its
// ridges (for pivoting to neighbors) and a triangulation. Exact rational
// pivots make coplanar and collinear inputs unproblematic.

struct SubFacet {
  Vec normal;  // primitive, outward: <x, normal> <= offset
  Rational offset;
  std::vector<int> on;                      // all input points on the plane
  std::vector<int> verts;                   // extreme points among them
  std::vector<std::vector<int>> ridges;     // point sets of (r-2)-faces
  std::vector<std::vector<int>> simplices;  // triangulation of the facet
};

struct HullResult {
  std::vector<int> verts;
  std::vector<SubFacet> facets;
  std::vector<std::vector<int>> simplices;  // triangulation of the polytope
};

// Greedy affinely independent subset; returns difference vectors rooted at
// the first index.
Matrix affine_basis(const std::vector<Vec>& pts,
                    const std::vector<int>& idxs) {
  Matrix basis;
  const Vec& p0 = pts[idxs[0]];
  int current = 0;
  for (std::size_t i = 1; i < idxs.size(); ++i) {
    Vec d = sub(pts[idxs[i]], p0);
    if (is_zero_vec(d)) continue;
    basis.push_back(d);
    if (rank(basis) > current) {
      ++current;
    } else {
      basis.pop_back();
    }
  }
  return basis;
}

int affine_dim_of(const std::vector<Vec>& pts, const std::vector<int>& idxs) {
  return static_cast<int>(affine_basis(pts, idxs).size());
}

// Rotates the supporting hyperplane <u, x> <= c around the affine hull of
// axis_pts until it hits the next point. away (optional) is a point on the
// current plane that must strictly leave it, which orients the rotation.
void rotate_supporting(const std::vector<Vec>& pts, Vec& u, Rational& c,
                       const std::vector<int>& axis_pts, int away) {
  int r = static_cast<int>(u.size());
  const Vec& p0 = pts[axis_pts[0]];
  Matrix dirs;
  for (std::size_t i = 1; i < axis_pts.size(); ++i) {
    Vec d = sub(pts[axis_pts[i]], p0);
    if (!is_zero_vec(d)) dirs.push_back(std::move(d));
  }
  Matrix candidates = nullspace(dirs, r);
  Vec w;
  for (auto& cand : candidates) {
    Matrix pair{u, cand};
    if (rank(pair) == 2) {
      w = std::move(cand);
      break;
    }
  }
  if (w.empty()) throw InternalError("no independent rotation direction");

  if (away >= 0) {
    Rational b = dot(w, sub(pts[away], p0));
    if (b == 0) throw InternalError("pivot anchor lies on the rotation axis");
    if (b > 0) w = scale_vec(w, Rational(-1));
  } else {
    bool pos = false, neg = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      Rational a = c - dot(u, pts[i]);
      if (a == 0) continue;
      Rational b = dot(w, sub(pts[i], p0));
      if (b > 0) pos = true;
      if (b < 0) neg = true;
    }
    if (!pos && neg) w = scale_vec(w, Rational(-1));
    if (!pos && !neg)
      throw InternalError("rotation sees no points off the axis hyperplane");
  }

  // Stage 1: sweep u towards w; a blocking point p (strictly below the
  // plane, strictly on the rising side) stops the sweep at a new
  // supporting plane through the axis.
  bool have = false;
  Rational best;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Rational a = c - dot(u, pts[i]);
    if (a == 0) continue;  // on the plane; stays feasible by orientation
    Rational b = dot(w, sub(pts[i], p0));
    if (b <= 0) continue;
    Rational t = a / b;
    if (!have || t < best) {
      best = t;
      have = true;
    }
  }
  if (have) {
    Vec rotated = add(u, scale_vec(w, best));
    u = make_primitive(rotated);
    c = dot(u, p0);
    return;
  }

  // The sweep reached w itself (a quarter turn). The w-plane is supporting
  // and contains the axis; if it touches a point off the old plane it is
  // the sought plane.
  Rational cw = dot(w, p0);
  bool progressed = false;
  bool any_below = false;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Rational a = c - dot(u, pts[i]);
    if (a == 0) continue;
    any_below = true;
    if (dot(w, pts[i]) == cw) progressed = true;
  }
  if (!any_below)
    throw InternalError("rotation on a degenerate point set");
  if (progressed) {
    u = make_primitive(w);
    c = dot(u, p0);
    return;
  }

  // Stage 2: continue the same turn past w, sweeping w towards -u. Every
  // point strictly below the old plane now rises, so a blocker exists.
  bool have2 = false;
  Rational best2;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Rational a = c - dot(u, pts[i]);
    if (a == 0) continue;
    Rational drop = cw - dot(w, pts[i]);  // > 0 here: no touch, no block
    Rational t = drop / a;
    if (!have2 || t < best2) {
      best2 = t;
      have2 = true;
    }
  }
  Vec rotated = sub(scale_vec(w, Rational(1)), scale_vec(u, best2));
  u = make_primitive(rotated);
  c = dot(u, p0);
}

// First facet: start from the coordinate-max supporting plane and rotate
// until the touching set spans a full hyperplane.
void initial_facet(const std::vector<Vec>& pts, int r, Vec& u, Rational& c) {
  u.assign(r, Rational(0));
  u[0] = 1;
  c = dot(u, pts[0]);
  for (const auto& p : pts) c = std::max(c, dot(u, p));
  for (;;) {
    std::vector<int> on;
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (dot(u, pts[i]) == c) on.push_back(static_cast<int>(i));
    if (affine_dim_of(pts, on) == r - 1) {
      u = make_primitive(u);
      c = dot(u, pts[on[0]]);
      return;
    }
    rotate_supporting(pts, u, c, on, -1);
  }
}

std::vector<Vec> to_local(const std::vector<Vec>& pts,
                          const std::vector<int>& idxs) {
  const Vec& p0 = pts[idxs[0]];
  Matrix basis = affine_basis(pts, idxs);
  int k = static_cast<int>(basis.size());
  int r = static_cast<int>(p0.size());
  Matrix cols(r, Vec(k));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < k; ++j) cols[i][j] = basis[j][i];
  std::vector<Vec> local;
  local.reserve(idxs.size());
  for (int idx : idxs) {
    auto coords = solve_full_col_rank(cols, sub(pts[idx], p0));
    if (!coords) throw InternalError("point outside its own affine hull");
    local.push_back(std::move(*coords));
  }
  return local;
}

HullResult hull_full(const std::vector<Vec>& pts, int r);

SubFacet build_facet(const std::vector<Vec>& pts, const Vec& u,
                     const Rational& c, int r) {
  SubFacet f;
  f.normal = u;
  f.offset = c;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (dot(u, pts[i]) == c) f.on.push_back(static_cast<int>(i));
  if (r == 1) {
    f.verts = f.on;  // a single point after dedup
    f.simplices = {{f.on[0]}};
    return f;
  }
  std::vector<Vec> local = to_local(pts, f.on);
  HullResult sub = hull_full(local, r - 1);
  for (int v : sub.verts) f.verts.push_back(f.on[v]);
  std::sort(f.verts.begin(), f.verts.end());
  for (const auto& sf : sub.facets) {
    std::vector<int> ridge;
    for (int v : sf.on) ridge.push_back(f.on[v]);
    std::sort(ridge.begin(), ridge.end());
    f.ridges.push_back(std::move(ridge));
  }
  for (const auto& s : sub.simplices) {
    std::vector<int> mapped;
    for (int v : s) mapped.push_back(f.on[v]);
    f.simplices.push_back(std::move(mapped));
  }
  return f;
}

HullResult hull_full(const std::vector<Vec>& pts, int r) {
  HullResult res;
  if (r == 0) {
    res.verts = {0};
    res.simplices = {{0}};
    return res;
  }
  if (r == 1) {
    int imin = 0, imax = 0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      if (pts[i][0] < pts[imin][0]) imin = static_cast<int>(i);
      if (pts[i][0] > pts[imax][0]) imax = static_cast<int>(i);
    }
    SubFacet hi, lo;
    hi.normal = {Rational(1)};
    hi.offset = pts[imax][0];
    hi.on = hi.verts = {imax};
    hi.simplices = {{imax}};
    lo.normal = {Rational(-1)};
    lo.offset = -pts[imin][0];
    lo.on = lo.verts = {imin};
    lo.simplices = {{imin}};
    res.facets = {std::move(hi), std::move(lo)};
    res.verts = {std::min(imin, imax), std::max(imin, imax)};
    res.simplices = {{std::min(imin, imax), std::max(imin, imax)}};
    return res;
  }

  Vec u;
  Rational c;
  initial_facet(pts, r, u, c);

  auto key_of = [](const Vec& n, const Rational& off) {
    Vec k = n;
    k.push_back(off);
    return k;
  };
  std::map<Vec, bool> seen;
  std::vector<std::pair<Vec, Rational>> queue{{u, c}};
  seen[key_of(u, c)] = true;

  while (!queue.empty()) {
    auto [fu, fc] = queue.back();
    queue.pop_back();
    SubFacet f = build_facet(pts, fu, fc, r);
    for (const auto& ridge : f.ridges) {
      std::set<int> ridge_set(ridge.begin(), ridge.end());
      int away = -1;
      for (int v : f.verts) {
        if (!ridge_set.count(v)) {
          away = v;
          break;
        }
      }
      if (away < 0) throw InternalError("facet equals its own ridge");
      Vec nu = fu;
      Rational nc = fc;
      rotate_supporting(pts, nu, nc, ridge, away);
      Vec key = key_of(nu, nc);
      if (!seen.count(key)) {
        seen[key] = true;
        queue.emplace_back(std::move(nu), std::move(nc));
      }
    }
    res.facets.push_back(std::move(f));
  }

  std::set<int> vset;
  for (const auto& f : res.facets)
    vset.insert(f.verts.begin(), f.verts.end());
  res.verts.assign(vset.begin(), vset.end());

  // Fan triangulation from the first vertex over facets avoiding it.
  int apex = res.verts[0];
  for (const auto& f : res.facets) {
    if (dot(f.normal, pts[apex]) == f.offset) continue;
    for (const auto& s : f.simplices) {
      std::vector<int> simplex = s;
      simplex.push_back(apex);
      res.simplices.push_back(std::move(simplex));
    }
  }
  return res;
}

}  // namespace

Polytope Polytope::hull(const std::vector<Vec>& points, int dim) {
  if (points.empty()) throw InvalidInput("hull of an empty point set");
  if (dim < 1) throw InvalidInput("ambient dimension must be >= 1");
  for (const auto& p : points) {
    if (static_cast<int>(p.size()) != dim)
      throw InvalidInput("point dimension does not match ambient dimension");
  }

  std::vector<Vec> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  Polytope poly;
  poly.dim_ = dim;

  std::vector<int> all(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) all[i] = static_cast<int>(i);
  int adim = affine_dim_of(pts, all);
  poly.aff_dim_ = adim;

  if (adim == 0) {
    poly.vertices_ = {pts[0]};
    return poly;
  }

  if (adim == dim) {
    HullResult hr = hull_full(pts, dim);
    std::map<int, int> remap;
    for (std::size_t i = 0; i < hr.verts.size(); ++i) {
      remap[hr.verts[i]] = static_cast<int>(i);
      poly.vertices_.push_back(pts[hr.verts[i]]);
    }
    // hr.verts is sorted by point index and pts is lex-sorted, so the
    // vertex list is already in lexicographic order.
    for (auto& f : hr.facets) {
      Facet facet;
      facet.normal = f.normal;
      facet.offset = f.offset;
      for (int v : f.verts) facet.vertex_ids.push_back(remap[v]);
      for (auto& s : f.simplices) {
        std::vector<int> mapped;
        for (int v : s) mapped.push_back(remap[v]);
        facet.simplices.push_back(std::move(mapped));
      }
      poly.facets_.push_back(std::move(facet));
    }
    return poly;
  }

  // Lower-dimensional: hull inside the affine hull to find the minimal
  // vertex set; no ambient H-representation is kept.
  std::vector<Vec> local = to_local(pts, all);
  HullResult hr = hull_full(local, adim);
  for (int v : hr.verts) poly.vertices_.push_back(pts[v]);
  return poly;
}

Rational Polytope::support(const Vec& direction) const {
  if (static_cast<int>(direction.size()) != dim_)
    throw InvalidInput("support direction has wrong dimension");
  Rational best = dot(vertices_[0], direction);
  for (std::size_t i = 1; i < vertices_.size(); ++i)
    best = std::max(best, dot(vertices_[i], direction));
  return best;
}

std::vector<Vec> Polytope::normal_directions() const {
  if (!full_dimensional())
    throw DegenerateInput("facet normals of a lower-dimensional polytope");
  std::vector<Vec> out;
  out.reserve(facets_.size());
  for (const auto& f : facets_) out.push_back(f.normal);
  return out;
}

bool Polytope::contains(const Vec& point) const {
  if (!full_dimensional())
    throw DegenerateInput("containment test needs a full-dimensional polytope");
  for (const auto& f : facets_) {
    if (dot(f.normal, point) > f.offset) return false;
  }
  return true;
}

bool Polytope::contains(const Polytope& other) const {
  for (const auto& v : other.vertices_) {
    if (!contains(v)) return false;
  }
  return true;
}

Polytope Polytope::minkowski_sum(const Polytope& other) const {
  if (dim_ != other.dim_)
    throw InvalidInput("Minkowski sum of polytopes of different dimensions");
  std::vector<Vec> sums;
  sums.reserve(vertices_.size() * other.vertices_.size());
  for (const auto& p : vertices_)
    for (const auto& q : other.vertices_) sums.push_back(add(p, q));
  return hull(sums, dim_);
}

Polytope Polytope::scaled(const Rational& t) const {
  if (t < 0) throw InvalidInput("scaling factor must be nonnegative");
  if (t == 0) {
    Polytope point;
    point.dim_ = dim_;
    point.aff_dim_ = 0;
    point.vertices_ = {Vec(dim_, Rational(0))};
    return point;
  }
  Polytope out = *this;
  for (auto& v : out.vertices_) v = scale_vec(v, t);
  for (auto& f : out.facets_) f.offset *= t;
  return out;
}

Polytope Polytope::translated(const Vec& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw InvalidInput("translation vector has wrong dimension");
  Polytope out = *this;
  for (auto& v : out.vertices_) v = add(v, x);
  for (auto& f : out.facets_) f.offset += dot(f.normal, x);
  return out;
}

bool Polytope::operator==(const Polytope& other) const {
  return dim_ == other.dim_ && aff_dim_ == other.aff_dim_ &&
         vertices_ == other.vertices_;
}

}  // namespace nefcalc
