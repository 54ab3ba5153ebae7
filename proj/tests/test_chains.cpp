#include <doctest.h>

#include <algorithm>

#include "helgason/chains.hpp"
#include "helgason/weights.hpp"

using namespace helgason;

namespace {

// All kinds-strings over {d, e} of the given length.
std::vector<std::string> all_patterns(std::size_t length) {
    std::vector<std::string> out{""};
    for (std::size_t k = 0; k < length; ++k) {
        std::vector<std::string> next;
        for (const auto& prefix : out) {
            next.push_back(prefix + 'd');
            next.push_back(prefix + 'e');
        }
        out = std::move(next);
    }
    return out;
}

// Declared finite test family: all basis vectors, all +-1 coordinate
// combinations, and -sum(delta_i).
std::vector<HWeight> test_family(std::size_t n_delta, std::size_t n_eps) {
    std::vector<HWeight> family;
    const std::size_t n = n_delta + n_eps;
    auto coord = [&](std::size_t k) {
        return k < n_delta ? delta_basis(n_delta, n_eps, k + 1)
                           : eps_basis(n_delta, n_eps, k - n_delta + 1);
    };
    for (std::size_t k = 0; k < n; ++k) family.push_back(coord(k));
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        HWeight w(n_delta, n_eps);
        for (std::size_t k = 0; k < n; ++k)
            w = (mask >> k) & 1 ? w - coord(k) : w + coord(k);
        family.push_back(w);
    }
    HWeight neg_deltas(n_delta, n_eps);
    for (std::size_t k = 0; k < n_delta; ++k)
        neg_deltas = neg_deltas - delta_basis(n_delta, n_eps, k + 1);
    family.push_back(neg_deltas);
    return family;
}

HWeight minus_sum_delta(const DeltaEpsChain& chain) {
    HWeight w(chain.n_delta, chain.n_eps);
    for (std::size_t k = 1; k <= chain.n_delta; ++k)
        w = w - delta_basis(chain.n_delta, chain.n_eps, k);
    return w;
}

}  // namespace

TEST_CASE("chain construction and validation") {
    const DeltaEpsChain chain = chain_from_kinds("deed");
    CHECK(chain.kinds() == "deed");
    CHECK(chain.n_delta == 2);
    CHECK(chain.n_eps == 2);
    CHECK(chain.validate().empty());
    CHECK(chain_to_string(chain) == "d1 e1 e2 d2");
    CHECK_THROWS_AS(chain_from_kinds("dxe"), std::invalid_argument);

    DeltaEpsChain bad = chain;
    bad.symbols[3] = bad.symbols[0];
    CHECK(bad.validate().find("duplicate") != std::string::npos);
    bad = chain;
    bad.symbols[0].index = 7;
    CHECK(bad.validate().find("out of range") != std::string::npos);
}

TEST_CASE("simple systems of chains") {
    SUBCASE("two symbols") {
        const DeltaEpsChain chain = chain_from_kinds("de");
        const auto pi = simple_system(chain);
        REQUIRE(pi.size() == 1);
        CHECK(hweight_to_string(pi[0]) == "d1 - e1");
    }
    SUBCASE("compatible chain of (1,1,1,1)") {
        const DeltaEpsChain chain = compatible_chain({1, 1, 1, 1});
        CHECK(chain_to_string(chain) == "d2 e2 e1 d1");
        const auto pi = simple_system(chain);
        REQUIRE(pi.size() == 3);
        CHECK(hweight_to_string(pi[0]) == "d2 - e2");
        CHECK(hweight_to_string(pi[1]) == "-e1 + e2");
        CHECK(hweight_to_string(pi[2]) == "-d1 + e1");
    }
    SUBCASE("chains of length < 2 are rejected") {
        CHECK_THROWS_AS(simple_system(chain_from_kinds("d")), std::invalid_argument);
    }
}

TEST_CASE("compatible chains of the worked pairs") {
    CHECK(chain_to_string(compatible_chain({2, 1, 1, 1})) == "d3 e2 d2 e1 d1");
    CHECK(compatible_chain({2, 1, 1, 1}).kinds() == "deded");
    CHECK(is_palindrome(compatible_chain({2, 1, 1, 1})));

    // kinds identity: d^q e^s d^{p-q} e^{r-s} e^s d^q, palindrome iff p=q or r=s
    for (std::size_t p = 0; p <= 3; ++p)
        for (std::size_t q = 0; q <= p; ++q)
            for (std::size_t r = 0; r <= 3; ++r)
                for (std::size_t s = 0; s <= r; ++s) {
                    const PairParams params{p, q, r, s};
                    if (!params.validate().empty()) continue;
                    const DeltaEpsChain chain = compatible_chain(params);
                    CHECK(chain.symbols.size() == params.total());
                    CHECK(chain.validate().empty());
                    const std::string expected = std::string(q, 'd') +
                                                 std::string(s, 'e') +
                                                 std::string(p - q, 'd') +
                                                 std::string(r - s, 'e') +
                                                 std::string(s, 'e') + std::string(q, 'd');
                    CHECK(chain.kinds() == expected);
                    CHECK(is_palindrome(chain) == (p == q || r == s));
                }
}

TEST_CASE("compatible chain reproduces the expected simple-root shapes") {
    // (2,2,2,1): chain d3 d4 e3 e2 e1 d2 d1, so the simple system consists of
    // consecutive differences across the segment boundaries.
    const PairParams params{2, 2, 2, 1};
    const DeltaEpsChain chain = compatible_chain(params);
    CHECK(chain_to_string(chain) == "d3 d4 e3 e2 e1 d2 d1");
    const auto pi = simple_system(chain);
    std::vector<std::string> rendered;
    for (const auto& root : pi) rendered.push_back(hweight_to_string(root));
    const std::vector<std::string> expected = {"d3 - d4",  "d4 - e3",  "-e2 + e3",
                                               "-e1 + e2", "-d2 + e1", "-d1 + d2"};
    CHECK(rendered == expected);
}

TEST_CASE("swap lemma on all chains of length up to 5") {
    for (std::size_t length = 2; length <= 5; ++length)
        for (const auto& pattern : all_patterns(length)) {
            const DeltaEpsChain chain = chain_from_kinds(pattern);
            for (std::size_t i = 0; i + 1 < chain.symbols.size(); ++i) {
                DeltaEpsChain swapped = chain;
                std::swap(swapped.symbols[i], swapped.symbols[i + 1]);
                const auto pi = simple_system(chain);
                const auto pi_after = simple_system(swapped);
                const HWeight alpha =
                    symbol_weight(chain.symbols[i], chain.n_delta, chain.n_eps) -
                    symbol_weight(chain.symbols[i + 1], chain.n_delta, chain.n_eps);
                const bool odd =
                    chain.symbols[i].kind != chain.symbols[i + 1].kind;
                for (std::size_t k = 0; k + 1 < chain.symbols.size(); ++k) {
                    HWeight expected = pi[k];
                    if (odd) {
                        // merged roots next to the swap, negated root at it
                        if (k + 1 == i || k == i + 1) expected = pi[k] + alpha;
                        if (k == i) expected = -pi[k];
                    } else {
                        // even reflection permutes the two symbols linearly
                        const Rational aa = pairing(alpha, alpha);
                        expected = pi[k] - (2 * pairing(pi[k], alpha) / aa) * alpha;
                    }
                    CHECK(pi_after[k] == expected);
                }
            }
        }
}

TEST_CASE("reversal chain structure") {
    SUBCASE("length 2") {
        const auto rc = reversal_chain(chain_from_kinds("de"));
        REQUIRE(rc.steps.size() == 1);
        CHECK(rc.steps[0].parity == Parity::odd);
    }
    SUBCASE("length 3 walks S1 right then S3 left") {
        const DeltaEpsChain chain = chain_from_kinds("dde");
        const auto rc = reversal_chain(chain);
        REQUIRE(rc.steps.size() == 3);
        CHECK(hweight_to_string(reflection_root(rc.steps[0], 2, 1)) == "d1 - d2");
        CHECK(hweight_to_string(reflection_root(rc.steps[1], 2, 1)) == "d1 - e1");
        CHECK(hweight_to_string(reflection_root(rc.steps[2], 2, 1)) == "d2 - e1");
    }
    SUBCASE("compatible chain of (1,1,1,1): 6 steps, 4 odd") {
        const auto rc = reversal_chain(compatible_chain({1, 1, 1, 1}));
        CHECK(rc.steps.size() == 6);
        std::size_t odd = 0;
        for (const auto& step : rc.steps)
            if (step.parity == Parity::odd) ++odd;
        CHECK(odd == 4);
    }
    SUBCASE("the induced simple system is negated") {
        for (const auto& pattern : all_patterns(5)) {
            const DeltaEpsChain chain = chain_from_kinds(pattern);
            DeltaEpsChain reversed = chain;
            std::reverse(reversed.symbols.begin(), reversed.symbols.end());
            const auto pi = simple_system(chain);
            auto pi_rev = simple_system(reversed);
            std::reverse(pi_rev.begin(), pi_rev.end());
            REQUIRE(pi.size() == pi_rev.size());
            for (std::size_t k = 0; k < pi.size(); ++k) CHECK(pi_rev[k] == -pi[k]);
            // and reversal_chain's own internal swap simulation agrees
            CHECK(reversal_chain(chain).steps.size() ==
                  pattern.size() * (pattern.size() - 1) / 2);
        }
    }
}

TEST_CASE("single reflections on weights") {
    const std::size_t nd = 2, ne = 1;
    const SimpleReflection even_refl{{ChainSymbol::Kind::delta, 1},
                                     {ChainSymbol::Kind::delta, 2},
                                     Parity::even,
                                     0};
    CHECK(apply_reflection(delta_basis(nd, ne, 1), even_refl, nd, ne) ==
          delta_basis(nd, ne, 2));

    const SimpleReflection odd_refl{{ChainSymbol::Kind::delta, 1},
                                    {ChainSymbol::Kind::eps, 1},
                                    Parity::odd,
                                    0};
    // with the signature form, <d1 - e1, d1 - e1> = 1 + (-1) = 0, so the root
    // is isotropic and fixes itself under the odd reflection
    const HWeight fixed = delta_basis(nd, ne, 1) - eps_basis(nd, ne, 1);
    CHECK(pairing(fixed, delta_basis(nd, ne, 1) - eps_basis(nd, ne, 1)) == 0);
    CHECK(apply_reflection(fixed, odd_refl, nd, ne) == fixed);
    CHECK(apply_reflection(delta_basis(nd, ne, 1), odd_refl, nd, ne) ==
          eps_basis(nd, ne, 1));

    // parity mislabeling at an isotropic root must throw
    const SimpleReflection mislabeled{{ChainSymbol::Kind::delta, 1},
                                      {ChainSymbol::Kind::eps, 1},
                                      Parity::even,
                                      0};
    CHECK_THROWS_AS(apply_reflection(fixed, mislabeled, nd, ne), std::domain_error);
}

TEST_CASE("full reversal action on the spherical embedding") {
    // (1,1,1,1), lambda = -2(d1 - d2): the reversal maps it to its negative
    const DeltaEpsChain chain = compatible_chain({1, 1, 1, 1});
    const auto rc = reversal_chain(chain);
    HWeight lam(2, 2);
    lam.delta_coeffs[0] = -2;
    lam.delta_coeffs[1] = 2;
    CHECK(apply_chain(lam, rc) == -lam);

    // on -sum(delta): every odd step acts effectively
    HWeight probe = minus_sum_delta(chain);
    for (const auto& step : rc.steps) {
        if (step.parity == Parity::odd)
            CHECK(pairing(probe, reflection_root(step, chain.n_delta, chain.n_eps)) != 0);
        probe = apply_reflection(probe, step, chain.n_delta, chain.n_eps);
    }
}

TEST_CASE("palindromes are exactly the chains where odd steps may be dropped") {
    for (std::size_t length = 2; length <= 6; ++length)
        for (const auto& pattern : all_patterns(length)) {
            const DeltaEpsChain chain = chain_from_kinds(pattern);
            const auto rc = reversal_chain(chain);
            const auto family = test_family(chain.n_delta, chain.n_eps);
            bool agree = true;
            for (const auto& w : family)
                if (apply_chain(w, rc) != even_only_action(w, rc)) {
                    agree = false;
                    break;
                }
            CHECK(agree == is_palindrome(chain));
            if (!is_palindrome(chain)) {
                // disagreement is witnessed at -sum(delta_i)
                const HWeight w = minus_sum_delta(chain);
                CHECK(apply_chain(w, rc) != even_only_action(w, rc));
            }
        }
}

TEST_CASE("non-palindrome witness in coordinates") {
    // "dde": full action and even-only action differ at -d1 - d2
    const DeltaEpsChain chain = chain_from_kinds("dde");
    const auto rc = reversal_chain(chain);
    const HWeight w = minus_sum_delta(chain);
    const HWeight full = apply_chain(w, rc);
    const HWeight even_only = even_only_action(w, rc);
    CHECK(full != even_only);
    CHECK(hweight_to_string(full) == "-2*d1 - d2 + e1");
    CHECK(hweight_to_string(even_only) == "-d1 - d2");
}

TEST_CASE("palindrome prefix and suffix phases may drop their odd steps") {
    // chains A B A~ with |A| = |A~| = k and A A~ a palindrome: the depth-< k
    // phases of the reversal are the A/A~ bubble phases, and replacing them by
    // their even-only action leaves the total action unchanged.
    const std::vector<std::pair<std::string, std::size_t>> shapes = {
        {"deed", 1}, {"deded", 1}, {"dedded", 2}, {"edddde", 1}, {"edede", 1}};
    for (const auto& [pattern, k] : shapes) {
        const DeltaEpsChain chain = chain_from_kinds(pattern);
        // A A~ palindrome precondition
        std::string a_part = pattern.substr(0, k) + pattern.substr(pattern.size() - k);
        CHECK(std::equal(a_part.begin(), a_part.end(), a_part.rbegin()));
        const auto rc = reversal_chain(chain);
        for (const auto& w : test_family(chain.n_delta, chain.n_eps)) {
            HWeight full = w, mixed = w;
            for (const auto& step : rc.steps) {
                full = apply_reflection(full, step, chain.n_delta, chain.n_eps);
                if (step.depth < k && step.parity == Parity::odd) continue;
                mixed = apply_reflection(mixed, step, chain.n_delta, chain.n_eps);
            }
            // odd steps inside the palindrome phases may be dropped only if the
            // even steps there are applied as plain reflections, which is what
            // the filtered pass does
            CHECK(full == mixed);
        }
    }
}
