#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "helgason/supermatrix.hpp"
#include "helgason/weights.hpp"

namespace helgason {

/// One symbol of a delta/eps chain: delta_i or eps_j.
struct ChainSymbol {
    enum class Kind { delta, eps };
    Kind kind = Kind::delta;
    std::size_t index = 1;

    bool operator==(const ChainSymbol&) const = default;
};

/// A string S_1 ... S_n of distinct delta/eps symbols together with the
/// ambient coordinate counts (needed to realize symbols as h*-weights).
struct DeltaEpsChain {
    std::vector<ChainSymbol> symbols;
    std::size_t n_delta = 0;
    std::size_t n_eps = 0;

    /// One character per symbol: 'd' or 'e'.
    std::string kinds() const;
    /// "" for valid, else a message: duplicate symbols or out-of-range
    /// indices.
    std::string validate() const;
};

/// One neighbor swap of a reflection chain. The root is left - right at
/// the moment the swap is applied; the step is odd exactly when the two
/// kinds differ. depth records the recursion level of the reversal
/// construction that produced the step (outermost = 0).
struct SimpleReflection {
    ChainSymbol left;
    ChainSymbol right;
    Parity parity = Parity::even;
    std::size_t depth = 0;
};

/// A sequence of simple reflections in application order, with the chain
/// it was derived from.
struct ReflectionChain {
    std::vector<SimpleReflection> steps;
    DeltaEpsChain source;
};

/// The symbol as a weight: delta_i or eps_j in the ambient coordinates.
HWeight symbol_weight(const ChainSymbol& sym, std::size_t n_delta, std::size_t n_eps);

/// The root of one step: left - right.
HWeight reflection_root(const SimpleReflection& refl, std::size_t n_delta,
                        std::size_t n_eps);

/// Pi(S_1 ... S_n) = {S_1 - S_2, ..., S_{n-1} - S_n}. Throws
/// std::invalid_argument for chains of length < 2.
std::vector<HWeight> simple_system(const DeltaEpsChain& chain);

/// The compatible chain of the pair:
/// delta_{p+1} .. delta_{p+q}  eps_{r+1} .. eps_{r+s}
/// delta_{q+1} .. delta_p      eps_{s+1} .. eps_r
/// eps_s .. eps_1              delta_q .. delta_1.
DeltaEpsChain compatible_chain(const PairParams& params);

/// The reflection sequence that reverses the chain by neighbor swaps:
/// move S_1 to the end, move S_n to the front, recurse on the interior.
/// n(n-1)/2 steps; throws std::invalid_argument on an invalid chain and
/// std::logic_error if the simulated swaps fail to reverse the chain.
ReflectionChain reversal_chain(const DeltaEpsChain& chain);

/// Even step: w - 2<w,root>/<root,root> * root (std::domain_error when the
/// root is isotropic). Odd step: w when <w,root> = 0, else w - root.
HWeight apply_reflection(const HWeight& w, const SimpleReflection& refl,
                         std::size_t n_delta, std::size_t n_eps);

/// Folds apply_reflection over the steps in application order.
HWeight apply_chain(const HWeight& w, const ReflectionChain& rc);

/// Applies only the even steps, each as the linear reflection; odd steps
/// are skipped entirely.
HWeight even_only_action(const HWeight& w, const ReflectionChain& rc);

/// Whether the kinds string reads the same in both directions.
bool is_palindrome(const DeltaEpsChain& chain);

/// "d2 e2 e1 d1" style rendering.
std::string chain_to_string(const DeltaEpsChain& chain);

/// Builds a chain from a kinds string such as "deed", assigning indices
/// 1, 2, ... per kind in order of appearance; n_delta/n_eps are the kind
/// counts. Throws std::invalid_argument on characters other than 'd'/'e'.
DeltaEpsChain chain_from_kinds(const std::string& kinds);

}  // namespace helgason
