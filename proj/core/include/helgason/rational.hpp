#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

namespace helgason {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational in the canonical "a/b" form used by all serialized
/// output (denominator always present, always positive, gcd-reduced).
std::string rational_to_string(const Rational& r);

/// Parses "a/b" or "a"; returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& s);

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

/// r in {0, 1, 2, ...}
inline bool is_natural(const Rational& r) { return is_integer(r) && r >= 0; }

/// r in {0, -2, -4, ...}
inline bool is_even_nonpositive_integer(const Rational& r) {
    return is_integer(r) && r <= 0 && numerator(r) % 2 == 0;
}

/// r in {-1, -3, -5, ...}
inline bool is_odd_negative_integer(const Rational& r) {
    return is_integer(r) && r < 0 && numerator(r) % 2 != 0;
}

/// Element of Q[i], exact. The scalar field for all Lie-algebra
/// computations: root functionals and root vectors carry the unit i.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussianRational(int n) : re(n) {}                  // NOLINT(google-explicit-constructor)
    GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussianRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GaussianRational conj() const { return {re, -im}; }
    Rational norm() const { return re * re + im * im; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussianRational operator-(const GaussianRational& a) { return {-a.re, -a.im}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw std::domain_error("GaussianRational: division by zero");
        const Rational n = b.norm();
        const GaussianRational p = a * b.conj();
        return {p.re / n, p.im / n};
    }
    GaussianRational& operator+=(const GaussianRational& o) { return *this = *this + o; }
    GaussianRational& operator-=(const GaussianRational& o) { return *this = *this - o; }
    GaussianRational& operator*=(const GaussianRational& o) { return *this = *this * o; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) {
        return !(a == b);
    }
};

/// Canonical rendering "a/b+c/d*i" (imaginary part always present).
std::string gaussian_to_string(const GaussianRational& z);

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace helgason
