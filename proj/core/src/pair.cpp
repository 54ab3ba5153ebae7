#include "helgason/pair.hpp"

#include <stdexcept>

namespace helgason {

PairData build_pair(const PairParams& params) {
    if (const std::string err = params.validate(); !err.empty())
        throw std::invalid_argument("build_pair: " + err);
    const std::size_t p = params.p, q = params.q, r = params.r, s = params.s;
    const SuperDims dims{p + q, r + s};

    PairData pair;
    pair.params = params;
    pair.dims = dims;

    pair.sigma = SuperMatrix(dims);
    for (std::size_t k = 1; k <= p; ++k) pair.sigma.at(k - 1, k - 1) = GaussianRational(1);
    for (std::size_t k = 1; k <= q; ++k)
        pair.sigma.at(p + k - 1, p + k - 1) = GaussianRational(-1);
    for (std::size_t k = 1; k <= r; ++k)
        pair.sigma.at(p + q + k - 1, p + q + k - 1) = GaussianRational(1);
    for (std::size_t k = 1; k <= s; ++k)
        pair.sigma.at(p + q + r + k - 1, p + q + r + k - 1) = GaussianRational(-1);

    auto unit = [&](std::size_t i, std::size_t j) { return SuperMatrix::unit(dims, i, j); };

    // m(.)-matrices: diag(bB, cB, bB | bF, cF, bF) pattern.
    for (std::size_t k = 1; k <= q; ++k) pair.h_basis.push_back(unit(k, k) + unit(p + k, p + k));
    for (std::size_t k = 1; k <= p - q; ++k) pair.h_basis.push_back(unit(q + k, q + k));
    for (std::size_t k = 1; k <= s; ++k)
        pair.h_basis.push_back(unit(p + q + k, p + q + k) +
                               unit(p + q + r + k, p + q + r + k));
    for (std::size_t k = 1; k <= r - s; ++k)
        pair.h_basis.push_back(unit(p + q + s + k, p + q + s + k));

    // A(.)-matrices spanning a.
    for (std::size_t k = 1; k <= q; ++k)
        pair.a_basis.push_back(unit(k, p + k) - unit(p + k, k));
    for (std::size_t k = 1; k <= s; ++k)
        pair.a_basis.push_back(unit(p + q + k, p + q + r + k) -
                               unit(p + q + r + k, p + q + k));
    pair.h_basis.insert(pair.h_basis.end(), pair.a_basis.begin(), pair.a_basis.end());
    return pair;
}

SuperMatrix theta_apply(const PairData& pair, const SuperMatrix& x) {
    if (!(x.dims() == pair.dims))
        throw std::invalid_argument("theta_apply: dimension mismatch");
    return pair.sigma * x * pair.sigma;  // sigma is its own inverse
}

std::pair<SuperMatrix, SuperMatrix> kp_split(const PairData& pair, const SuperMatrix& x) {
    const SuperMatrix tx = theta_apply(pair, x);
    const GaussianRational half(Rational(1, 2));
    return {half * (x + tx), half * (x - tx)};
}

}  // namespace helgason
