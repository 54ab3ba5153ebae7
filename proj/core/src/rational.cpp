#include "helgason/rational.hpp"

#include <sstream>

namespace helgason {

std::string rational_to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r) << '/' << denominator(r);
    return os.str();
}

std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(s));
        }
        const std::string num = s.substr(0, slash);
        const std::string den = s.substr(slash + 1);
        if (num.empty() || den.empty()) return std::nullopt;
        Integer d(den);
        if (d == 0) return std::nullopt;
        return Rational(Integer(num), d);
    } catch (const std::runtime_error&) {
        return std::nullopt;
    }
}

std::string gaussian_to_string(const GaussianRational& z) {
    std::string out = rational_to_string(z.re);
    if (z.im >= 0) {
        out += '+' + rational_to_string(z.im);
    } else {
        out += '-' + rational_to_string(-z.im);
    }
    out += "*i";
    return out;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) {
    return os << gaussian_to_string(z);
}

}  // namespace helgason
