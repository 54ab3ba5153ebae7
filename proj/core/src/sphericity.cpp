#include "helgason/sphericity.hpp"

#include <stdexcept>

#include "helgason/cfunction.hpp"
#include "helgason/chains.hpp"

namespace helgason {

namespace {

bool is_even_natural(const Rational& r) {
    return is_integer(r) && r >= 0 && numerator(r) % 2 == 0;
}

}  // namespace

bool cond_even_lambda_alpha(const std::vector<RestrictedRootDatum>& sigma_plus,
                            const AStarWeight& lam) {
    for (const auto& d : sigma_plus) {
        if (d.even_dim == 0) continue;
        if (!is_natural(lambda_alpha(lam, d.root))) return false;
    }
    return true;
}

bool cond_gl_pairing(const PairParams& params, const AStarWeight& lam) {
    for (const auto& alpha : sigma_plus_pattern(params))
        if (!is_even_natural(pairing(lam, alpha))) return false;
    return true;
}

bool gl_dominance_check(const PairParams& params, const AStarWeight& lam) {
    std::vector<Rational> chain;
    for (std::size_t k = 0; k < params.q; ++k) chain.push_back(-lam.ldelta[k]);
    for (std::size_t l = 0; l < params.s; ++l) chain.push_back(lam.leps[l]);
    chain.push_back(0);
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
        if (chain[k] < chain[k + 1]) return false;
    for (const auto& c : chain)
        if (!is_integer(c) || numerator(c) % 2 != 0) return false;
    return true;
}

namespace {

void enumerate_rec(const PairParams& params, long long bound, AStarWeight& lam,
                   std::size_t coord, std::vector<AStarWeight>& out) {
    const std::size_t n = params.q + params.s;
    if (coord == n) {
        if (gl_dominance_check(params, lam)) out.push_back(lam);
        return;
    }
    Rational& slot =
        coord < params.q ? lam.ldelta[coord] : lam.leps[coord - params.q];
    for (long long v = -bound; v <= bound; v += 2) {
        slot = v;
        enumerate_rec(params, bound, lam, coord + 1, out);
    }
    slot = 0;
}

}  // namespace

std::vector<AStarWeight> enumerate_spherical(const PairParams& params, long long bound) {
    if (bound < 0 || bound % 2 != 0)
        throw std::invalid_argument("enumerate_spherical: bound must be a nonnegative even integer");
    AStarWeight lam(params.q, params.s);
    std::vector<AStarWeight> out;
    enumerate_rec(params, bound, lam, 0, out);
    return out;
}

AtypicalityResult atypical_flag(const PairParams& params) {
    AtypicalityResult res;
    res.witness = HWeight(params.p + params.q, params.r + params.s);
    if (params.p > params.q && params.r > params.s) {
        res.atypical = true;
        res.witness_label = "cB1 - cF1";
        res.witness = delta_basis(params.p + params.q, params.r + params.s, params.q + 1) -
                      eps_basis(params.p + params.q, params.r + params.s, params.s + 1);
    }
    return res;
}

bool self_dual_check(const PairParams& params, const AStarWeight& lam) {
    const HWeight w = embed(lam, params);
    const ReflectionChain rc = reversal_chain(compatible_chain(params));
    return apply_chain(w, rc) == -w;
}

SphericityReport classify(const PairData& pair, const AStarWeight& lam) {
    const auto sigma_plus = positive_restricted_system(pair);
    SphericityReport rep;
    rep.lam = lam;
    rep.cond_even_lambda_alpha = cond_even_lambda_alpha(sigma_plus, lam);
    rep.cond_gl_pairing = cond_gl_pairing(pair.params, lam);
    rep.gl_dominant = gl_dominance_check(pair.params, lam);
    rep.high_enough = high_enough(sigma_plus, lam);
    rep.c_nonzero_at_shift = km_nonvanishing(sigma_plus, lam);
    rep.self_dual = self_dual_check(pair.params, lam);
    const AtypicalityResult at = atypical_flag(pair.params);
    rep.atypical = at.atypical;
    if (at.atypical) rep.notes.push_back("atypical pair, witness " + at.witness_label);
    for (const auto& d : sigma_plus) {
        if (!d.isotropic && pairing(d.root, d.root) < 0)
            rep.notes.push_back("negative-norm anisotropic root " + astar_to_string(d.root) +
                                ": lambda_alpha uses the signature form verbatim");
        if (d.isotropic && d.m < -2)
            rep.notes.push_back("isotropic root " + astar_to_string(d.root) +
                                " has multiplicity " + std::to_string(d.m) +
                                ", outside the m = -2 range of the worked examples");
    }
    return rep;
}

}  // namespace helgason
