#pragma once

#include <complex>
#include <string>
#include <vector>

#include "helgason/roots.hpp"
#include "helgason/weights.hpp"

namespace helgason {

/// One factor of the c-function product, indexed by an indivisible
/// positive restricted root.
struct CFactor {
    AStarWeight alpha;
    bool isotropic = false;
    // anisotropic data
    long long m = 0;
    long long m_double = 0;
    // isotropic data: the factor is the monomial <lambda,alpha>^qexp,
    // qexp = -m/2 (the constant prefactor is absorbed into c_0)
    long long qexp = 0;
};

/// Exact per-factor classification at a given weight.
enum class FactorStatus { finite, symbolic_zero, symbolic_pole, indeterminate };

struct FactorEvaluation {
    CFactor factor;
    FactorStatus status = FactorStatus::finite;
    std::size_t zero_order = 0;  // denominator Gamma-poles hit / monomial degree
    std::size_t pole_order = 0;  // numerator Gamma-pole hit
    std::complex<double> value{0.0, 0.0};
};

struct CValue {
    std::complex<double> value{1.0, 0.0};
    bool zero_flag = false;
    bool pole_flag = false;
    bool indeterminate_warning = false;
    std::vector<FactorEvaluation> per_factor;
};

/// lambda_alpha = <lam,alpha>/<alpha,alpha> under the signature form.
/// Throws std::domain_error for isotropic alpha.
Rational lambda_alpha(const AStarWeight& lam, const AStarWeight& alpha);

/// Factors c(lam) = c_0 prod_aniso 2^{-lam_a} Gamma(lam_a) /
/// [Gamma((m/2+1+lam_a)/2) Gamma((m/2+m_2a+lam_a)/2)] * prod_iso
/// <lam,alpha>^{-m/2} over the indivisible roots of sigma_plus, with
/// exact zero/pole classification per factor and a numeric value
/// (computed through the entire reciprocal Gamma, so symbolic zeros
/// come out tiny rather than exactly 0). Divisible entries of
/// sigma_plus are the doubles accounted for inside their indivisible
/// factor; a divisible entry whose half is missing from sigma_plus is
/// rejected with std::invalid_argument.
std::vector<FactorEvaluation> c_factorize(const std::vector<RestrictedRootDatum>& sigma_plus,
                                          const AStarWeight& lam);

/// Product of all factor evaluations, c_0 = 1. zero_flag/pole_flag
/// compare total symbolic zero and pole orders; equal nonzero orders
/// set the indeterminate warning instead of either flag.
CValue c_evaluate(const std::vector<RestrictedRootDatum>& sigma_plus, const AStarWeight& lam);

/// One witnessing root of the zero set classification, with the clause
/// (1 isotropic pairing, 2 even non-positive, 3 odd negative) it met.
struct ZeroWitness {
    AStarWeight alpha;
    int clause = 0;
};

struct ZeroSetReport {
    bool zero = false;
    std::vector<ZeroWitness> witnesses;
};

/// The zero-set criterion for c(lam + rho), evaluated directly on the
/// unshifted lam over the indivisible roots of sigma_plus:
/// (1) isotropic alpha with <lam,alpha> = 0;
/// (2) anisotropic alpha with lam_a + m + 2 m_2a in {0, -2, -4, ...};
/// (3) anisotropic alpha with lam_a + m + m_2a in {-1, -3, -5, ...}.
ZeroSetReport zeros_predicate(const std::vector<RestrictedRootDatum>& sigma_plus,
                              const AStarWeight& lam);

/// <lam,beta> > 0 for every isotropic positive beta, and for every odd
/// anisotropic indivisible positive alpha both lam_a + m + 2 m_2a > 0
/// and lam_a + m + m_2a + 1 > 0.
bool high_enough(const std::vector<RestrictedRootDatum>& sigma_plus, const AStarWeight& lam);

/// <lam,beta> != 0 for every isotropic positive beta, and for every odd
/// anisotropic indivisible positive alpha neither lam_a + m + 2 m_2a nor
/// lam_a + m + m_2a + 1 lies in {0, -2, -4, ...}.
bool km_nonvanishing(const std::vector<RestrictedRootDatum>& sigma_plus,
                     const AStarWeight& lam);

/// (t - 1)(t - 2) ... (t - qexp): the zero structure the Gamma-duplication
/// continuation would predict for an isotropic factor, monic-normalized.
/// Throws std::invalid_argument for qexp < 1.
Rational naive_duplication_polynomial(long long qexp, const Rational& t);

/// Gamma via the Lanczos approximation (reflection for Re z < 1/2).
/// Throws std::domain_error within 1e-12 of a non-positive integer.
std::complex<double> gamma_complex(std::complex<double> z);

/// Entire reciprocal 1/Gamma; exact small values near Gamma-poles.
std::complex<double> rgamma(std::complex<double> z);

}  // namespace helgason
