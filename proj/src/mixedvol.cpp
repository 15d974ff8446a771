#include "nefcalc/mixedvol.hpp"

#include <algorithm>
#include <map>

#include "nefcalc/errors.hpp"

namespace nefcalc {

Integer factorial(int n) {
  Integer f(1);
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return Integer(0);
  Integer b(1);
  for (int i = 0; i < k; ++i) {
    b *= (n - i);
    b /= (i + 1);
  }
  return b;
}

NefSequence NefSequence::reversed() const {
  NefSequence out = *this;
  std::reverse(out.s.begin(), out.s.end());
  return out;
}

Rational volume(const Polytope& p) {
  if (!p.full_dimensional()) return Rational(0);
  int d = p.dim();
  const auto& verts = p.vertices();

  Vec centroid(d, Rational(0));
  for (const auto& v : verts) centroid = add(centroid, v);
  centroid = scale_vec(centroid, Rational(1) / Rational((long)verts.size()));

  // Pyramids from the centroid over the triangulated boundary.
  Rational total(0);
  for (const auto& f : p.facets()) {
    for (const auto& simplex : f.simplices) {
      Matrix m;
      m.reserve(d);
      for (int vid : simplex) m.push_back(sub(verts[vid], centroid));
      Rational v = det(m);
      total += v < 0 ? -v : v;
    }
  }
  return total / Rational(factorial(d));
}

namespace {

// vol(a*P + b*Q) cached over the nonnegative integer grid.
class PairVolumeTable {
 public:
  PairVolumeTable(const Polytope& p, const Polytope& q) : p_(p), q_(q) {}

  const Rational& vol(int a, int b) {
    auto key = std::make_pair(a, b);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    Rational v;
    if (a == 0 && b == 0) {
      v = 0;
    } else if (a == 0) {
      v = volume(q_.scaled(Rational(b)));
    } else if (b == 0) {
      v = volume(p_.scaled(Rational(a)));
    } else {
      v = volume(p_.scaled(Rational(a)).minkowski_sum(q_.scaled(Rational(b))));
    }
    return cache_.emplace(key, std::move(v)).first->second;
  }

 private:
  const Polytope& p_;
  const Polytope& q_;
  std::map<std::pair<int, int>, Rational> cache_;
};

// d! * V(P^[i], Q^[d-i]) by polarization, collapsing repeated arguments:
// sum over subset sizes (a of the P's, b of the Q's).
Rational pair_mixed_scaled(PairVolumeTable& table, int d, int i) {
  Rational acc(0);
  for (int a = 0; a <= i; ++a) {
    for (int b = 0; b <= d - i; ++b) {
      if (a + b == 0) continue;
      Integer coef = binomial(i, a) * binomial(d - i, b);
      Rational term = Rational(coef) * table.vol(a, b);
      if ((d - a - b) % 2 != 0) term = -term;
      acc += term;
    }
  }
  return acc;
}

}  // namespace

Rational mixed_volume(const std::vector<Polytope>& polytopes) {
  if (polytopes.empty()) throw InvalidInput("mixed volume of an empty list");
  int d = polytopes[0].dim();
  if (static_cast<int>(polytopes.size()) != d)
    throw InvalidInput("mixed volume needs exactly d polytopes in dimension d");
  for (const auto& p : polytopes) {
    if (p.dim() != d)
      throw InvalidInput("mixed volume arguments have mixed dimensions");
  }

  // Group identical arguments so repeated-summand Minkowski sums reduce to
  // dilations before hulling.
  std::vector<Polytope> distinct;
  std::vector<int> counts;
  for (const auto& p : polytopes) {
    bool found = false;
    for (std::size_t g = 0; g < distinct.size(); ++g) {
      if (distinct[g] == p) {
        ++counts[g];
        found = true;
        break;
      }
    }
    if (!found) {
      distinct.push_back(p);
      counts.push_back(1);
    }
  }

  int groups = static_cast<int>(distinct.size());
  std::vector<int> pick(groups, 0);
  Rational acc(0);
  // Enumerate multiplicity vectors (a_1..a_g), a_j <= count_j.
  for (;;) {
    int total = 0;
    for (int g = 0; g < groups; ++g) total += pick[g];
    if (total > 0) {
      Integer coef(1);
      for (int g = 0; g < groups; ++g) coef *= binomial(counts[g], pick[g]);
      Polytope sum = distinct[0].scaled(Rational(0));
      bool first = true;
      for (int g = 0; g < groups; ++g) {
        if (pick[g] == 0) continue;
        Polytope part = distinct[g].scaled(Rational(pick[g]));
        sum = first ? part : sum.minkowski_sum(part);
        first = false;
      }
      Rational term = Rational(coef) * volume(sum);
      if ((d - total) % 2 != 0) term = -term;
      acc += term;
    }
    int g = 0;
    while (g < groups && pick[g] == counts[g]) pick[g++] = 0;
    if (g == groups) break;
    ++pick[g];
  }
  return acc / Rational(factorial(d));
}

std::vector<Rational> volume_polynomial(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim())
    throw InvalidInput("volume polynomial of polytopes in different dimensions");
  int d = p.dim();

  std::vector<Rational> values(d + 1);
  for (int t = 0; t <= d; ++t) {
    Polytope body = t == 0 ? p : p.minkowski_sum(q.scaled(Rational(t)));
    values[t] = volume(body);
  }

  // Lagrange interpolation on the nodes 0..d.
  std::vector<Rational> coeffs(d + 1, Rational(0));
  for (int t = 0; t <= d; ++t) {
    // Basis polynomial prod_{j != t} (x - j) / (t - j).
    std::vector<Rational> basis{Rational(1)};
    Rational denom(1);
    for (int j = 0; j <= d; ++j) {
      if (j == t) continue;
      std::vector<Rational> next(basis.size() + 1, Rational(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k] += basis[k] * Rational(-j);
        next[k + 1] += basis[k];
      }
      basis = std::move(next);
      denom *= Rational(t - j);
    }
    Rational w = values[t] / denom;
    for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += w * basis[k];
  }
  return coeffs;
}

NefSequence intersection_sequence(const Polytope& p, const Polytope& q) {
  if (p.dim() != q.dim())
    throw InvalidInput("intersection sequence of polytopes in different dimensions");
  int d = p.dim();
  PairVolumeTable table(p, q);
  NefSequence seq;
  seq.degree = d;
  seq.realized = true;
  seq.s.resize(d + 1);
  for (int i = 0; i <= d; ++i) seq.s[i] = pair_mixed_scaled(table, d, i);
  return seq;
}

}  // namespace nefcalc
