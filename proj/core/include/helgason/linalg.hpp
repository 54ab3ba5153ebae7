#pragma once

#include <optional>
#include <vector>

#include "helgason/rational.hpp"

namespace helgason::linalg {

using Vector = std::vector<GaussianRational>;
using Matrix = std::vector<Vector>;  // row-major, rows of equal length

Matrix identity_matrix(std::size_t n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Vector mat_vec(const Matrix& a, const Vector& v);

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

/// One solution x of A x = b (A given as rows), or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Solves A x_k = b_k for every column b_k of rhs with a single
/// elimination; the solutions come back as the columns of the result.
/// nullopt if any of the systems is inconsistent.
std::optional<Matrix> solve_columns(const Matrix& a, const Matrix& rhs);

/// Basis of the right nullspace of A.
std::vector<Vector> nullspace(const Matrix& a);

std::optional<Matrix> inverse(const Matrix& a);

// --- polynomials over Q[i], coefficients ascending, normalized (no ---
// --- trailing zero coefficients except for the zero polynomial)    ---

using Poly = std::vector<GaussianRational>;

Poly poly_normalize(Poly p);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_derivative(const Poly& p);
GaussianRational poly_eval(const Poly& p, const GaussianRational& x);
/// Remainder of a mod b (b nonzero).
Poly poly_mod(Poly a, const Poly& b);
/// Monic gcd.
Poly poly_gcd(Poly a, Poly b);
bool is_squarefree(const Poly& p);

/// Monic minimal polynomial of a square matrix over Q[i].
Poly minimal_polynomial(const Matrix& a);

/// All roots of p that lie in Q[i] (each once, no multiplicities).
std::vector<GaussianRational> gaussian_rational_roots(const Poly& p);

/// True when p is monic, squarefree and splits over Q[i]; on success the
/// roots are written to *roots.
bool splits_simply(const Poly& p, std::vector<GaussianRational>* roots);

}  // namespace helgason::linalg
