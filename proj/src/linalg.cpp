#include "nefcalc/linalg.hpp"

#include <algorithm>

#include "nefcalc/errors.hpp"

namespace nefcalc {

Rational dot(const Vec& a, const Vec& b) {
  Rational r(0);
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec add(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec scale_vec(const Vec& a, const Rational& t) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * t;
  return r;
}

bool is_zero_vec(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

namespace {

// In-place row echelon; returns rank and records pivot columns.
int echelon(Matrix& m, std::vector<int>* pivot_cols = nullptr) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[r], m[pivot]);
    for (int i = r + 1; i < rows; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[r][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return r;
}

}  // namespace

int rank(Matrix m) { return echelon(m); }

Rational det(Matrix m) {
  int n = static_cast<int>(m.size());
  Rational result(1);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int i = c; i < n; ++i) {
      if (m[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != c) {
      std::swap(m[c], m[pivot]);
      result = -result;
    }
    result *= m[c][c];
    for (int i = c + 1; i < n; ++i) {
      if (m[i][c] == 0) continue;
      Rational f = m[i][c] / m[c][c];
      for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return result;
}

std::optional<Vec> solve_full_col_rank(const Matrix& a, const Vec& b) {
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  Matrix aug(rows, Vec(cols + 1));
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) aug[i][j] = a[i][j];
    aug[i][cols] = b[i];
  }
  std::vector<int> pivots;
  echelon(aug, &pivots);
  // Back substitution over pivot rows; rows below the rank must be zero.
  Vec x(cols, Rational(0));
  int r = static_cast<int>(pivots.size());
  for (int i = r; i < rows; ++i) {
    if (aug[i][cols] != 0) return std::nullopt;
  }
  for (int i = r - 1; i >= 0; --i) {
    int c = pivots[i];
    if (c == cols) return std::nullopt;  // pivot in the rhs: inconsistent
    Rational s = aug[i][cols];
    for (int j = c + 1; j < cols; ++j) s -= aug[i][j] * x[j];
    x[c] = s / aug[i][c];
  }
  return x;
}

Matrix nullspace(const Matrix& rows_in, int n) {
  Matrix m = rows_in;
  std::vector<int> pivots;
  echelon(m, &pivots);
  std::vector<bool> is_pivot(n, false);
  for (int c : pivots) is_pivot[c] = true;
  Matrix basis;
  int r = static_cast<int>(pivots.size());
  for (int free_c = 0; free_c < n; ++free_c) {
    if (is_pivot[free_c]) continue;
    Vec v(n, Rational(0));
    v[free_c] = 1;
    for (int i = r - 1; i >= 0; --i) {
      int c = pivots[i];
      Rational s(0);
      for (int j = c + 1; j < n; ++j) s -= m[i][j] * v[j];
      v[c] = s / m[i][c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Vec make_primitive(const Vec& v) {
  Integer lcm_den(1);
  for (const auto& x : v) {
    Integer d = denominator(x);
    lcm_den = boost::multiprecision::lcm(lcm_den, d);
  }
  Integer g(0);
  std::vector<Integer> scaled(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    scaled[i] = numerator(v[i]) * (lcm_den / denominator(v[i]));
    g = boost::multiprecision::gcd(g, scaled[i]);
  }
  if (g == 0) throw InternalError("make_primitive on the zero vector");
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = Rational(scaled[i] / g);
  return out;
}

}  // namespace nefcalc
