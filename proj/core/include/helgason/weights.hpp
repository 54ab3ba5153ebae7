#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "helgason/rational.hpp"

namespace helgason {

/// Shape parameters of the pair. Validation (orientation and even-type
/// inequalities) lives in validate(); all other modules assume it passed.
struct PairParams {
    std::size_t p = 0;
    std::size_t q = 0;
    std::size_t r = 0;
    std::size_t s = 0;

    std::size_t total() const { return p + q + r + s; }
    friend bool operator==(const PairParams&, const PairParams&) = default;

    /// Empty string when valid; otherwise a message naming the violated
    /// inequality and, where applicable, the relabeling that would fix it.
    std::string validate() const;
};

/// Vector in h* over the delta/epsilon basis: sum_i d_i delta_i +
/// sum_j e_j eps_j with p+q delta- and r+s eps-coordinates. The basis is
/// orthonormal for the signature form: <delta_i,delta_j> = delta_ij,
/// <eps_i,eps_j> = -delta_ij, mixed pairings zero.
struct HWeight {
    std::vector<Rational> delta_coeffs;
    std::vector<Rational> eps_coeffs;

    HWeight() = default;
    HWeight(std::size_t n_delta, std::size_t n_eps)
        : delta_coeffs(n_delta), eps_coeffs(n_eps) {}

    bool is_zero() const;
    friend bool operator==(const HWeight&, const HWeight&) = default;

    friend HWeight operator+(const HWeight& a, const HWeight& b);
    friend HWeight operator-(const HWeight& a, const HWeight& b);
    friend HWeight operator-(const HWeight& a);
    friend HWeight operator*(const Rational& c, const HWeight& a);
};

/// Signature-form pairing.
Rational pairing(const HWeight& a, const HWeight& b);

/// delta_k (1-based) as a basis vector.
HWeight delta_basis(std::size_t n_delta, std::size_t n_eps, std::size_t k);
/// eps_k (1-based) as a basis vector.
HWeight eps_basis(std::size_t n_delta, std::size_t n_eps, std::size_t k);

/// Rendering like "d1 - d2 + 2*e1" ("0" for the zero vector).
std::string hweight_to_string(const HWeight& w);

/// Index into the fixed h-coordinate ordering
/// (bB_1..q, cB_1..p-q, bF_1..s, cF_1..r-s, aB_1..q, aF_1..s).
struct HBasisSlot {
    enum class Kind { bB, cB, bF, cF, aB, aF };
    Kind kind;
    std::size_t index;  // 1-based within its group
};

/// Slot labels in the fixed order, e.g. "bB1", "aF2".
std::vector<std::string> h_basis_labels(const PairParams& params);
HBasisSlot h_basis_slot(const PairParams& params, std::size_t position);

/// Value of the functional w on the h-basis element in the given slot.
/// a-type slots produce purely imaginary values.
GaussianRational evaluate(const HWeight& w, const PairParams& params, HBasisSlot slot);

/// Element of a* in Helgason coordinates (lambda^delta_1..q,
/// lambda^eps_1..s). Restricted roots, lambda and rho all live here.
struct AStarWeight {
    std::vector<Rational> ldelta;
    std::vector<Rational> leps;

    AStarWeight() = default;
    AStarWeight(std::size_t q, std::size_t s) : ldelta(q), leps(s) {}

    bool is_zero() const;
    friend bool operator==(const AStarWeight&, const AStarWeight&) = default;

    friend AStarWeight operator+(const AStarWeight& a, const AStarWeight& b);
    friend AStarWeight operator-(const AStarWeight& a, const AStarWeight& b);
    friend AStarWeight operator-(const AStarWeight& a);
    friend AStarWeight operator*(const Rational& c, const AStarWeight& a);
};

/// Pairing inherited from the signature form on h*:
/// <lam,mu> = 2 (lam^delta . mu^delta - lam^eps . mu^eps).
Rational pairing(const AStarWeight& a, const AStarWeight& b);

/// i a^B_k (resp. i a^F_l) as an a*-vector; both carry coefficient -1/2 in
/// their slot, matching i a^B_k = (delta_{p+k} - delta_k)/2.
AStarWeight ia_b(const PairParams& params, std::size_t k);
AStarWeight ia_f(const PairParams& params, std::size_t l);

/// Embedding a* -> h*: d_k = lam^delta_k, d_{p+k} = -lam^delta_k,
/// e_l = lam^eps_l, e_{r+l} = -lam^eps_l, c-coordinates zero.
HWeight embed(const AStarWeight& lam, const PairParams& params);

/// Restriction h* -> a*: mu^delta_k = -(d_{p+k} - d_k)/2,
/// mu^eps_l = -(e_{r+l} - e_l)/2. Left inverse of embed.
AStarWeight restrict_weight(const HWeight& w, const PairParams& params);

/// Rendering in terms of i*a coordinates, e.g. "-2*iaB1 + iaF1".
std::string astar_to_string(const AStarWeight& w);

}  // namespace helgason
