#pragma once

#include <utility>
#include <vector>

#include "helgason/supermatrix.hpp"
#include "helgason/weights.hpp"

namespace helgason {

/// The symmetric superpair (gl(p+q|r+s), theta) in matrix form.
/// h_basis follows the fixed slot order of h_basis_labels(); a_basis is
/// the trailing aB/aF segment of h_basis.
struct PairData {
    PairParams params;
    SuperDims dims;                     // (p+q | r+s)
    SuperMatrix sigma;                  // diag(1_p, -1_q | 1_r, -1_s)
    std::vector<SuperMatrix> h_basis;   // dim p+q+r+s
    std::vector<SuperMatrix> a_basis;   // dim q+s
};

/// Builds sigma, the A(.) matrices spanning a and the m(.) matrices
/// completing h. Throws std::invalid_argument with the validate() message
/// when the params invariants fail.
PairData build_pair(const PairParams& params);

/// theta(x) = sigma x sigma^{-1}.
SuperMatrix theta_apply(const PairData& pair, const SuperMatrix& x);

/// (k-part, p-part) = ((x + theta x)/2, (x - theta x)/2).
std::pair<SuperMatrix, SuperMatrix> kp_split(const PairData& pair, const SuperMatrix& x);

}  // namespace helgason
