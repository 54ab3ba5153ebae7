#include "helgason/chains.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace helgason {

std::string DeltaEpsChain::kinds() const {
    std::string out;
    out.reserve(symbols.size());
    for (const auto& sym : symbols)
        out.push_back(sym.kind == ChainSymbol::Kind::delta ? 'd' : 'e');
    return out;
}

std::string DeltaEpsChain::validate() const {
    for (const auto& sym : symbols) {
        const std::size_t bound = sym.kind == ChainSymbol::Kind::delta ? n_delta : n_eps;
        if (sym.index < 1 || sym.index > bound)
            return "symbol index out of range: " +
                   std::string(sym.kind == ChainSymbol::Kind::delta ? "d" : "e") +
                   std::to_string(sym.index);
    }
    for (std::size_t i = 0; i < symbols.size(); ++i)
        for (std::size_t j = i + 1; j < symbols.size(); ++j)
            if (symbols[i] == symbols[j])
                return "duplicate symbol: " +
                       std::string(symbols[i].kind == ChainSymbol::Kind::delta ? "d" : "e") +
                       std::to_string(symbols[i].index);
    return {};
}

HWeight symbol_weight(const ChainSymbol& sym, std::size_t n_delta, std::size_t n_eps) {
    return sym.kind == ChainSymbol::Kind::delta ? delta_basis(n_delta, n_eps, sym.index)
                                                : eps_basis(n_delta, n_eps, sym.index);
}

HWeight reflection_root(const SimpleReflection& refl, std::size_t n_delta,
                        std::size_t n_eps) {
    return symbol_weight(refl.left, n_delta, n_eps) -
           symbol_weight(refl.right, n_delta, n_eps);
}

std::vector<HWeight> simple_system(const DeltaEpsChain& chain) {
    if (const std::string err = chain.validate(); !err.empty())
        throw std::invalid_argument("simple_system: " + err);
    if (chain.symbols.size() < 2)
        throw std::invalid_argument("simple_system: chain has fewer than 2 symbols");
    std::vector<HWeight> out;
    for (std::size_t k = 0; k + 1 < chain.symbols.size(); ++k)
        out.push_back(symbol_weight(chain.symbols[k], chain.n_delta, chain.n_eps) -
                      symbol_weight(chain.symbols[k + 1], chain.n_delta, chain.n_eps));
    return out;
}

DeltaEpsChain compatible_chain(const PairParams& params) {
    const std::size_t p = params.p, q = params.q, r = params.r, s = params.s;
    DeltaEpsChain chain;
    chain.n_delta = p + q;
    chain.n_eps = r + s;
    auto d = [&](std::size_t k) {
        chain.symbols.push_back({ChainSymbol::Kind::delta, k});
    };
    auto e = [&](std::size_t k) { chain.symbols.push_back({ChainSymbol::Kind::eps, k}); };
    for (std::size_t k = p + 1; k <= p + q; ++k) d(k);
    for (std::size_t k = r + 1; k <= r + s; ++k) e(k);
    for (std::size_t k = q + 1; k <= p; ++k) d(k);
    for (std::size_t k = s + 1; k <= r; ++k) e(k);
    for (std::size_t k = s; k >= 1; --k) e(k);
    for (std::size_t k = q; k >= 1; --k) d(k);
    return chain;
}

namespace {

void reverse_range(std::vector<ChainSymbol>& work, std::size_t lo, std::size_t hi,
                   std::size_t depth, std::vector<SimpleReflection>& steps) {
    if (hi <= lo) return;
    auto swap_at = [&](std::size_t pos) {
        const ChainSymbol left = work[pos], right = work[pos + 1];
        steps.push_back({left, right,
                         left.kind == right.kind ? Parity::even : Parity::odd, depth});
        std::swap(work[pos], work[pos + 1]);
    };
    // S_1 walks to the end ...
    for (std::size_t pos = lo; pos < hi; ++pos) swap_at(pos);
    // ... then S_n (now at hi-1) walks to the front ...
    for (std::size_t pos = hi - 1; pos > lo; --pos) swap_at(pos - 1);
    // ... and the interior is reverted recursively.
    if (hi - lo >= 2) reverse_range(work, lo + 1, hi - 1, depth + 1, steps);
}

}  // namespace

ReflectionChain reversal_chain(const DeltaEpsChain& chain) {
    if (const std::string err = chain.validate(); !err.empty())
        throw std::invalid_argument("reversal_chain: " + err);
    ReflectionChain rc;
    rc.source = chain;
    if (chain.symbols.size() < 2) return rc;
    std::vector<ChainSymbol> work = chain.symbols;
    reverse_range(work, 0, work.size() - 1, 0, rc.steps);
    const std::size_t n = chain.symbols.size();
    if (rc.steps.size() != n * (n - 1) / 2)
        throw std::logic_error("reversal_chain: wrong step count");
    std::vector<ChainSymbol> reversed = chain.symbols;
    std::reverse(reversed.begin(), reversed.end());
    if (work != reversed)
        throw std::logic_error("reversal_chain: swaps did not revert the chain");
    return rc;
}

HWeight apply_reflection(const HWeight& w, const SimpleReflection& refl,
                         std::size_t n_delta, std::size_t n_eps) {
    const HWeight root = reflection_root(refl, n_delta, n_eps);
    const Rational wa = pairing(w, root);
    if (refl.parity == Parity::odd) return wa == 0 ? w : w - root;
    const Rational aa = pairing(root, root);
    if (aa == 0)
        throw std::domain_error(
            "apply_reflection: even reflection at an isotropic root (parity bookkeeping "
            "bug)");
    return w - (2 * wa / aa) * root;
}

HWeight apply_chain(const HWeight& w, const ReflectionChain& rc) {
    HWeight out = w;
    for (const auto& step : rc.steps)
        out = apply_reflection(out, step, rc.source.n_delta, rc.source.n_eps);
    return out;
}

HWeight even_only_action(const HWeight& w, const ReflectionChain& rc) {
    HWeight out = w;
    for (const auto& step : rc.steps)
        if (step.parity == Parity::even)
            out = apply_reflection(out, step, rc.source.n_delta, rc.source.n_eps);
    return out;
}

bool is_palindrome(const DeltaEpsChain& chain) {
    const std::string k = chain.kinds();
    return std::equal(k.begin(), k.end(), k.rbegin());
}

std::string chain_to_string(const DeltaEpsChain& chain) {
    std::ostringstream os;
    for (std::size_t k = 0; k < chain.symbols.size(); ++k) {
        if (k) os << ' ';
        os << (chain.symbols[k].kind == ChainSymbol::Kind::delta ? 'd' : 'e')
           << chain.symbols[k].index;
    }
    return os.str();
}

DeltaEpsChain chain_from_kinds(const std::string& kinds) {
    DeltaEpsChain chain;
    for (const char c : kinds) {
        if (c == 'd')
            chain.symbols.push_back({ChainSymbol::Kind::delta, ++chain.n_delta});
        else if (c == 'e')
            chain.symbols.push_back({ChainSymbol::Kind::eps, ++chain.n_eps});
        else
            throw std::invalid_argument("chain_from_kinds: expected only 'd' or 'e'");
    }
    return chain;
}

}  // namespace helgason
