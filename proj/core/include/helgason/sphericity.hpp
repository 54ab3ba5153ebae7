#pragma once

#include <string>
#include <vector>

#include "helgason/pair.hpp"
#include "helgason/roots.hpp"
#include "helgason/weights.hpp"

namespace helgason {

/// lambda_alpha in {0, 1, 2, ...} for every even positive restricted
/// root (restricted roots with a nonzero even root space).
bool cond_even_lambda_alpha(const std::vector<RestrictedRootDatum>& sigma_plus,
                            const AStarWeight& lam);

/// <lam,alpha> in {0, 2, 4, ...} for every member of the positive-root
/// candidate pattern (the full printed pattern, not just the members
/// that occur as restricted roots: for degenerate shapes such as q = 0,
/// r = s + 1 the pattern members absent from Sigma are exactly what
/// makes this predicate match gl_dominance_check).
bool cond_gl_pairing(const PairParams& params, const AStarWeight& lam);

/// -lam^delta_1 >= ... >= -lam^delta_q >= lam^eps_1 >= ... >= lam^eps_s
/// >= 0 with every coefficient an even integer.
bool gl_dominance_check(const PairParams& params, const AStarWeight& lam);

/// All weights passing gl_dominance_check with every coefficient of
/// magnitude <= bound, in lexicographic coordinate order
/// (lam^delta_1..q, lam^eps_1..s). bound must be a nonnegative even
/// integer (std::invalid_argument otherwise).
std::vector<AStarWeight> enumerate_spherical(const PairParams& params, long long bound);

/// Whether some odd full root restricts to zero on a. For gl this
/// happens exactly when p > q and r > s; the witness is then the c-type
/// odd root cB_1 - cF_1 (as the full root delta_{q+1} - eps_{s+1}).
struct AtypicalityResult {
    bool atypical = false;
    std::string witness_label;  // "cB1 - cF1" when atypical, else empty
    HWeight witness;            // the witnessing full root, zero when typical
};
AtypicalityResult atypical_flag(const PairParams& params);

/// Embeds lam into h*, pushes it through the reversal of the compatible
/// chain, and reports whether the result is exactly -embed(lam).
bool self_dual_check(const PairParams& params, const AStarWeight& lam);

/// Aggregated weight-level classification.
struct SphericityReport {
    AStarWeight lam;
    bool cond_even_lambda_alpha = false;
    bool cond_gl_pairing = false;
    bool gl_dominant = false;
    bool high_enough = false;
    bool c_nonzero_at_shift = false;
    bool self_dual = false;
    bool atypical = false;
    /// Convention flags and the atypicality witness: negative-norm
    /// anisotropic roots (lambda_alpha computed verbatim with the
    /// signature form) and isotropic multiplicities below -2 (outside
    /// the range of worked examples) are called out here.
    std::vector<std::string> notes;
};

SphericityReport classify(const PairData& pair, const AStarWeight& lam);

}  // namespace helgason
