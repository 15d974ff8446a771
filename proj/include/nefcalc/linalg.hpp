#ifndef NEFCALC_LINALG_HPP
#define NEFCALC_LINALG_HPP

#include <optional>
#include <vector>

#include "nefcalc/rational.hpp"

namespace nefcalc {

using Matrix = std::vector<Vec>;

Rational dot(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec scale_vec(const Vec& a, const Rational& t);
bool is_zero_vec(const Vec& a);

// Row rank via fraction-free-ish Gaussian elimination on a copy.
int rank(Matrix m);

// Exact determinant of a square matrix.
Rational det(Matrix m);

// Solves A x = b for A with full column rank (rows >= cols); returns
// nullopt when the system is inconsistent.
std::optional<Vec> solve_full_col_rank(const Matrix& a, const Vec& b);

// Basis of {x : rows . x = 0} in Q^n.
Matrix nullspace(const Matrix& rows, int n);

// Divides through by the gcd of the numerators after clearing denominators,
// fixing the sign of the first nonzero entry as given by the input.
Vec make_primitive(const Vec& v);

}  // namespace nefcalc

#endif
