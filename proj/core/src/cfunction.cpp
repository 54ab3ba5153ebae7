#include "helgason/cfunction.hpp"

#include <cmath>
#include <stdexcept>

namespace helgason {

namespace {

double to_double(const Rational& x) { return x.convert_to<double>(); }

// Keeps exact non-positive integers off the sin zeros of the reflection
// formula: at such points rgamma(0.0) is exactly 0 and a net-cancelling
// factor would evaluate to 0/0. The nudge turns it into a tiny finite
// number whose order of magnitude still witnesses the symbolic order.
double nudged(double x) {
    const double nearest = std::round(x);
    if (nearest <= 0.0 && std::abs(x - nearest) < 1e-15) return x + 1e-13;
    return x;
}

// Lanczos approximation, g = 7, for Re z >= 1/2.
std::complex<double> lanczos_positive(std::complex<double> z) {
    static const double coeffs[9] = {
        0.99999999999980993,     676.5203681218851,      -1259.1392167224028,
        771.32342877765313,      -176.61502916214059,    12.507343278686905,
        -0.13857109526572012,    9.9843695780195716e-6,  1.5056327351493116e-7};
    z -= 1.0;
    std::complex<double> x = coeffs[0];
    for (int k = 1; k < 9; ++k) x += coeffs[k] / (z + static_cast<double>(k));
    const std::complex<double> t = z + 7.5;
    return std::sqrt(2.0 * M_PI) * std::pow(t, z + 0.5) * std::exp(-t) * x;
}

}  // namespace

std::complex<double> gamma_complex(std::complex<double> z) {
    if (std::abs(z.imag()) < 1e-12) {
        const double nearest = std::round(z.real());
        if (nearest <= 0.0 && std::abs(z.real() - nearest) < 1e-12)
            throw std::domain_error("gamma_complex: argument within 1e-12 of a pole");
    }
    if (z.real() < 0.5)
        return M_PI / (std::sin(M_PI * z) * lanczos_positive(1.0 - z));
    return lanczos_positive(z);
}

std::complex<double> rgamma(std::complex<double> z) {
    if (z.real() <= 0.5) return std::sin(M_PI * z) * lanczos_positive(1.0 - z) / M_PI;
    return 1.0 / lanczos_positive(z);
}

Rational lambda_alpha(const AStarWeight& lam, const AStarWeight& alpha) {
    const Rational aa = pairing(alpha, alpha);
    if (aa == 0) throw std::domain_error("lambda_alpha: isotropic root");
    return pairing(lam, alpha) / aa;
}

std::vector<FactorEvaluation> c_factorize(const std::vector<RestrictedRootDatum>& sigma_plus,
                                          const AStarWeight& lam) {
    std::vector<FactorEvaluation> out;
    for (const auto& d : sigma_plus) {
        if (!d.indivisible) {
            const AStarWeight half = Rational(1, 2) * d.root;
            if (!find_root(sigma_plus, half))
                throw std::invalid_argument(
                    "c_factorize: divisible root without its half in the index set");
            continue;  // accounted for via m_double of the half
        }
        FactorEvaluation fe;
        fe.factor.alpha = d.root;
        fe.factor.isotropic = d.isotropic;
        if (d.isotropic) {
            if (d.m >= 0 || d.m % 2 != 0)
                throw std::domain_error(
                    "c_factorize: isotropic root with multiplicity not an even negative "
                    "integer");
            fe.factor.qexp = -d.m / 2;
            const Rational la = pairing(lam, d.root);
            if (la == 0) {
                fe.zero_order = static_cast<std::size_t>(fe.factor.qexp);
                fe.status = FactorStatus::symbolic_zero;
            }
            fe.value = std::pow(std::complex<double>(to_double(la), 0.0),
                                static_cast<double>(fe.factor.qexp));
        } else {
            fe.factor.m = d.m;
            fe.factor.m_double = d.m_double;
            const Rational t = lambda_alpha(lam, d.root);
            const Rational a1 = (Rational(d.m, 2) + 1 + t) / 2;
            const Rational a2 = (Rational(d.m, 2) + d.m_double + t) / 2;
            if (is_integer(t) && t <= 0) fe.pole_order += 1;
            if (is_integer(a1) && a1 <= 0) fe.zero_order += 1;
            if (is_integer(a2) && a2 <= 0) fe.zero_order += 1;
            if (fe.zero_order > fe.pole_order)
                fe.status = FactorStatus::symbolic_zero;
            else if (fe.pole_order > fe.zero_order)
                fe.status = FactorStatus::symbolic_pole;
            else if (fe.pole_order > 0)
                fe.status = FactorStatus::indeterminate;
            // All Gammas through the entire 1/Gamma, so symbolic zeros come
            // out tiny and symbolic poles huge instead of raising.
            fe.value = std::pow(2.0, -to_double(t)) * rgamma(nudged(to_double(a1))) *
                       rgamma(nudged(to_double(a2))) / rgamma(nudged(to_double(t)));
        }
        out.push_back(std::move(fe));
    }
    return out;
}

CValue c_evaluate(const std::vector<RestrictedRootDatum>& sigma_plus, const AStarWeight& lam) {
    CValue cv;
    cv.per_factor = c_factorize(sigma_plus, lam);
    std::size_t zeros = 0, poles = 0;
    for (const auto& fe : cv.per_factor) {
        cv.value *= fe.value;
        zeros += fe.zero_order;
        poles += fe.pole_order;
    }
    cv.zero_flag = zeros > poles;
    cv.pole_flag = poles > zeros;
    cv.indeterminate_warning = zeros == poles && zeros > 0;
    return cv;
}

ZeroSetReport zeros_predicate(const std::vector<RestrictedRootDatum>& sigma_plus,
                              const AStarWeight& lam) {
    ZeroSetReport report;
    for (const auto& d : sigma_plus) {
        if (!d.indivisible) continue;
        if (d.isotropic) {
            if (pairing(lam, d.root) == 0) report.witnesses.push_back({d.root, 1});
            continue;
        }
        const Rational t = lambda_alpha(lam, d.root);
        if (is_even_nonpositive_integer(t + d.m + 2 * d.m_double))
            report.witnesses.push_back({d.root, 2});
        if (is_odd_negative_integer(t + d.m + d.m_double))
            report.witnesses.push_back({d.root, 3});
    }
    report.zero = !report.witnesses.empty();
    return report;
}

bool high_enough(const std::vector<RestrictedRootDatum>& sigma_plus, const AStarWeight& lam) {
    for (const auto& d : sigma_plus) {
        if (d.isotropic) {
            if (pairing(lam, d.root) <= 0) return false;
            continue;
        }
        if (!d.indivisible || d.odd_dim == 0) continue;
        const Rational t = lambda_alpha(lam, d.root);
        if (t + d.m + 2 * d.m_double <= 0) return false;
        if (t + d.m + d.m_double + 1 <= 0) return false;
    }
    return true;
}

bool km_nonvanishing(const std::vector<RestrictedRootDatum>& sigma_plus,
                     const AStarWeight& lam) {
    for (const auto& d : sigma_plus) {
        if (d.isotropic) {
            if (pairing(lam, d.root) == 0) return false;
            continue;
        }
        if (!d.indivisible || d.odd_dim == 0) continue;
        const Rational t = lambda_alpha(lam, d.root);
        if (is_even_nonpositive_integer(t + d.m + 2 * d.m_double)) return false;
        if (is_even_nonpositive_integer(t + d.m + d.m_double + 1)) return false;
    }
    return true;
}

Rational naive_duplication_polynomial(long long qexp, const Rational& t) {
    if (qexp < 1)
        throw std::invalid_argument("naive_duplication_polynomial: qexp must be >= 1");
    Rational out = 1;
    for (long long k = 1; k <= qexp; ++k) out *= t - k;
    return out;
}

}  // namespace helgason
