#pragma once

#include <optional>
#include <string>
#include <vector>

#include "helgason/pair.hpp"
#include "helgason/supermatrix.hpp"
#include "helgason/weights.hpp"

namespace helgason {

/// One root of the full system Delta(g:h) with its explicit root vector.
struct FullRootDatum {
    HWeight root;
    Parity parity = Parity::even;
    SuperMatrix root_vector;
    std::string table_tag;  // e.g. "BB4", "FB2"
};

/// All (p+q+r+s)^2 - (p+q+r+s) roots, transcribed row family by row
/// family from the block tables, each entry checked at construction time
/// to satisfy bracket(h, vec) = root(h) * vec for every h in h_basis
/// (std::logic_error on failure; this signals a transcription bug).
std::vector<FullRootDatum> full_root_table(const PairData& pair);

/// Result of the table-independent cross-check.
struct RootOracleReport {
    bool ok = false;
    std::size_t root_space_count = 0;    // number of distinct nonzero weights
    std::size_t zero_weight_dim = 0;     // dim of the joint 0-eigenspace
    std::size_t total_dim = 0;           // sum of all eigenspace dims
    std::vector<std::string> mismatches;
};

/// Simultaneously diagonalizes ad(h) for all h in h_basis by exact linear
/// algebra (joint eigenspace refinement over Q[i], eigenvalues from minimal
/// polynomials), with no reference to the tables, and compares the result
/// against full_root_table: same eigenfunctionals, proportional root
/// vectors, same parities, and the dimension bookkeeping
/// sum_gamma dim g^gamma + dim(zero space) = (p+q+r+s)^2.
RootOracleReport oracle_verify_roots(const PairData& pair);

/// A restricted root with its signed multiplicity data.
struct RestrictedRootDatum {
    AStarWeight root;
    std::size_t even_dim = 0;
    std::size_t odd_dim = 0;
    long long m = 0;  // even_dim - odd_dim
    bool isotropic = false;
    bool indivisible = false;
    bool has_double = false;
    long long m_double = 0;  // m of 2*root, 0 when absent
};

/// Groups the full roots by nonzero restriction to a and fills in the
/// multiplicity and divisibility flags. Returns all of Sigma (both signs),
/// ordered deterministically.
std::vector<RestrictedRootDatum> restricted_root_data(const PairData& pair);

/// The printed positive-root candidate pattern
/// {i aB_i, i(aB_i +- aB_k) i<k, 2i aB_i, i aF_j, i(aF_j +- aF_l) j<l,
///  2i aF_j, i(aB_i +- aF_j)} as a*-vectors, independent of which of them
/// actually occur as restricted roots.
std::vector<AStarWeight> sigma_plus_pattern(const PairParams& params);

/// The pattern intersected with the actual restricted root set: Sigma^+.
std::vector<RestrictedRootDatum> positive_restricted_system(const PairData& pair);

/// rho = (1/2) sum_{beta in sigma_plus} m_beta beta.
AStarWeight weyl_vector(const std::vector<RestrictedRootDatum>& sigma_plus);

/// rho computed along the other route: for each a-basis element h,
/// (1/2) supertrace of ad(h) on n = (+)_{alpha in Sigma^+} g^alpha, using
/// the explicit root vectors with parity signs.
AStarWeight weyl_vector_supertrace(const PairData& pair);

/// Simple roots B(Phi) = Phi \ (Phi + Phi) of a positive system.
std::vector<RestrictedRootDatum> simple_roots(const std::vector<RestrictedRootDatum>& phi);

/// The adjacent positive system Psi = alpha^- u (Phi \ alpha^+), where
/// alpha^+ = Sigma n Q_{>0} alpha. Throws std::invalid_argument when alpha
/// is not an indivisible simple root of phi.
std::vector<RestrictedRootDatum> flip_positive_system(
    const std::vector<RestrictedRootDatum>& phi, const RestrictedRootDatum& alpha,
    const std::vector<RestrictedRootDatum>& sigma);

/// rho_alpha = (1/2) sum_{beta in alpha^+} m_beta beta over
/// alpha^+ = Sigma n Q_{>0} alpha.
AStarWeight rho_alpha(const RestrictedRootDatum& alpha,
                      const std::vector<RestrictedRootDatum>& sigma);

/// Looks up a root in a system; nullopt when absent.
std::optional<RestrictedRootDatum> find_root(const std::vector<RestrictedRootDatum>& system,
                                             const AStarWeight& root);

}  // namespace helgason
