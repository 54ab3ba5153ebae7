#include "helgason/weights.hpp"

#include <sstream>
#include <stdexcept>

namespace helgason {

std::string PairParams::validate() const {
    if (total() < 1) return "p + q + r + s >= 1 violated";
    if (p < q) return "p >= q violated; relabel p <-> q to normalize the orientation";
    if (r < s) return "r >= s violated; relabel r <-> s to normalize the orientation";
    // With both orientations normalized the product is automatically >= 0,
    // but keep the check so the message can name the defining inequality.
    if ((static_cast<long long>(p) - static_cast<long long>(q)) *
            (static_cast<long long>(r) - static_cast<long long>(s)) <
        0)
        return "(p - q)(r - s) >= 0 violated (pair not of even type)";
    return {};
}

bool HWeight::is_zero() const {
    for (const auto& c : delta_coeffs)
        if (c != 0) return false;
    for (const auto& c : eps_coeffs)
        if (c != 0) return false;
    return true;
}

namespace {

void check_shape(const HWeight& a, const HWeight& b) {
    if (a.delta_coeffs.size() != b.delta_coeffs.size() ||
        a.eps_coeffs.size() != b.eps_coeffs.size())
        throw std::invalid_argument("HWeight: coordinate count mismatch");
}

}  // namespace

HWeight operator+(const HWeight& a, const HWeight& b) {
    check_shape(a, b);
    HWeight out = a;
    for (std::size_t k = 0; k < b.delta_coeffs.size(); ++k)
        out.delta_coeffs[k] += b.delta_coeffs[k];
    for (std::size_t k = 0; k < b.eps_coeffs.size(); ++k) out.eps_coeffs[k] += b.eps_coeffs[k];
    return out;
}

HWeight operator-(const HWeight& a, const HWeight& b) { return a + (-b); }

HWeight operator-(const HWeight& a) {
    HWeight out = a;
    for (auto& c : out.delta_coeffs) c = -c;
    for (auto& c : out.eps_coeffs) c = -c;
    return out;
}

HWeight operator*(const Rational& c, const HWeight& a) {
    HWeight out = a;
    for (auto& x : out.delta_coeffs) x *= c;
    for (auto& x : out.eps_coeffs) x *= c;
    return out;
}

Rational pairing(const HWeight& a, const HWeight& b) {
    check_shape(a, b);
    Rational acc = 0;
    for (std::size_t k = 0; k < a.delta_coeffs.size(); ++k)
        acc += a.delta_coeffs[k] * b.delta_coeffs[k];
    for (std::size_t k = 0; k < a.eps_coeffs.size(); ++k)
        acc -= a.eps_coeffs[k] * b.eps_coeffs[k];
    return acc;
}

HWeight delta_basis(std::size_t n_delta, std::size_t n_eps, std::size_t k) {
    if (k < 1 || k > n_delta) throw std::out_of_range("delta_basis: index out of range");
    HWeight w(n_delta, n_eps);
    w.delta_coeffs[k - 1] = 1;
    return w;
}

HWeight eps_basis(std::size_t n_delta, std::size_t n_eps, std::size_t k) {
    if (k < 1 || k > n_eps) throw std::out_of_range("eps_basis: index out of range");
    HWeight w(n_delta, n_eps);
    w.eps_coeffs[k - 1] = 1;
    return w;
}

std::string hweight_to_string(const HWeight& w) {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& c, char letter, std::size_t idx) {
        if (c == 0) return;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const Rational a = abs(c);
        if (a != 1)
            os << (denominator(a) == 1 ? numerator(a).str() : rational_to_string(a)) << '*';
        os << letter << idx;
        first = false;
    };
    for (std::size_t k = 0; k < w.delta_coeffs.size(); ++k)
        emit(w.delta_coeffs[k], 'd', k + 1);
    for (std::size_t k = 0; k < w.eps_coeffs.size(); ++k) emit(w.eps_coeffs[k], 'e', k + 1);
    if (first) return "0";
    return os.str();
}

std::vector<std::string> h_basis_labels(const PairParams& params) {
    std::vector<std::string> out;
    auto push = [&](const char* stem, std::size_t count) {
        for (std::size_t k = 1; k <= count; ++k) out.push_back(stem + std::to_string(k));
    };
    push("bB", params.q);
    push("cB", params.p - params.q);
    push("bF", params.s);
    push("cF", params.r - params.s);
    push("aB", params.q);
    push("aF", params.s);
    return out;
}

HBasisSlot h_basis_slot(const PairParams& params, std::size_t position) {
    const std::size_t groups[6] = {params.q, params.p - params.q, params.s,
                                   params.r - params.s, params.q, params.s};
    const HBasisSlot::Kind kinds[6] = {HBasisSlot::Kind::bB, HBasisSlot::Kind::cB,
                                       HBasisSlot::Kind::bF, HBasisSlot::Kind::cF,
                                       HBasisSlot::Kind::aB, HBasisSlot::Kind::aF};
    std::size_t offset = 0;
    for (int g = 0; g < 6; ++g) {
        if (position < offset + groups[g]) return {kinds[g], position - offset + 1};
        offset += groups[g];
    }
    throw std::out_of_range("h_basis_slot: position out of range");
}

GaussianRational evaluate(const HWeight& w, const PairParams& params, HBasisSlot slot) {
    const auto& d = w.delta_coeffs;
    const auto& e = w.eps_coeffs;
    if (d.size() != params.p + params.q || e.size() != params.r + params.s)
        throw std::invalid_argument("evaluate: weight shape does not match params");
    const std::size_t k = slot.index;
    switch (slot.kind) {
        case HBasisSlot::Kind::bB:
            return GaussianRational(d[k - 1] + d[params.p + k - 1]);
        case HBasisSlot::Kind::cB:
            return GaussianRational(d[params.q + k - 1]);
        case HBasisSlot::Kind::bF:
            return GaussianRational(e[k - 1] + e[params.r + k - 1]);
        case HBasisSlot::Kind::cF:
            return GaussianRational(e[params.s + k - 1]);
        case HBasisSlot::Kind::aB:
            return GaussianRational(Rational(0), d[params.p + k - 1] - d[k - 1]);
        case HBasisSlot::Kind::aF:
            return GaussianRational(Rational(0), e[params.r + k - 1] - e[k - 1]);
    }
    throw std::logic_error("evaluate: unknown slot kind");
}

bool AStarWeight::is_zero() const {
    for (const auto& c : ldelta)
        if (c != 0) return false;
    for (const auto& c : leps)
        if (c != 0) return false;
    return true;
}

namespace {

void check_shape(const AStarWeight& a, const AStarWeight& b) {
    if (a.ldelta.size() != b.ldelta.size() || a.leps.size() != b.leps.size())
        throw std::invalid_argument("AStarWeight: coordinate count mismatch");
}

}  // namespace

AStarWeight operator+(const AStarWeight& a, const AStarWeight& b) {
    check_shape(a, b);
    AStarWeight out = a;
    for (std::size_t k = 0; k < b.ldelta.size(); ++k) out.ldelta[k] += b.ldelta[k];
    for (std::size_t k = 0; k < b.leps.size(); ++k) out.leps[k] += b.leps[k];
    return out;
}

AStarWeight operator-(const AStarWeight& a, const AStarWeight& b) { return a + (-b); }

AStarWeight operator-(const AStarWeight& a) {
    AStarWeight out = a;
    for (auto& c : out.ldelta) c = -c;
    for (auto& c : out.leps) c = -c;
    return out;
}

AStarWeight operator*(const Rational& c, const AStarWeight& a) {
    AStarWeight out = a;
    for (auto& x : out.ldelta) x *= c;
    for (auto& x : out.leps) x *= c;
    return out;
}

Rational pairing(const AStarWeight& a, const AStarWeight& b) {
    check_shape(a, b);
    Rational acc = 0;
    for (std::size_t k = 0; k < a.ldelta.size(); ++k) acc += a.ldelta[k] * b.ldelta[k];
    for (std::size_t k = 0; k < a.leps.size(); ++k) acc -= a.leps[k] * b.leps[k];
    return 2 * acc;
}

AStarWeight ia_b(const PairParams& params, std::size_t k) {
    if (k < 1 || k > params.q) throw std::out_of_range("ia_b: index out of range");
    AStarWeight w(params.q, params.s);
    w.ldelta[k - 1] = Rational(-1, 2);
    return w;
}

AStarWeight ia_f(const PairParams& params, std::size_t l) {
    if (l < 1 || l > params.s) throw std::out_of_range("ia_f: index out of range");
    AStarWeight w(params.q, params.s);
    w.leps[l - 1] = Rational(-1, 2);
    return w;
}

HWeight embed(const AStarWeight& lam, const PairParams& params) {
    if (lam.ldelta.size() != params.q || lam.leps.size() != params.s)
        throw std::invalid_argument("embed: weight shape does not match params");
    HWeight w(params.p + params.q, params.r + params.s);
    for (std::size_t k = 0; k < params.q; ++k) {
        w.delta_coeffs[k] = lam.ldelta[k];
        w.delta_coeffs[params.p + k] = -lam.ldelta[k];
    }
    for (std::size_t l = 0; l < params.s; ++l) {
        w.eps_coeffs[l] = lam.leps[l];
        w.eps_coeffs[params.r + l] = -lam.leps[l];
    }
    return w;
}

AStarWeight restrict_weight(const HWeight& w, const PairParams& params) {
    if (w.delta_coeffs.size() != params.p + params.q ||
        w.eps_coeffs.size() != params.r + params.s)
        throw std::invalid_argument("restrict_weight: weight shape does not match params");
    AStarWeight out(params.q, params.s);
    for (std::size_t k = 0; k < params.q; ++k)
        out.ldelta[k] = (w.delta_coeffs[k] - w.delta_coeffs[params.p + k]) / 2;
    for (std::size_t l = 0; l < params.s; ++l)
        out.leps[l] = (w.eps_coeffs[l] - w.eps_coeffs[params.r + l]) / 2;
    return out;
}

std::string astar_to_string(const AStarWeight& w) {
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const Rational& lam_coeff, const char* stem, std::size_t idx) {
        const Rational c = -2 * lam_coeff;  // coefficient of i*a in this slot
        if (c == 0) return;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        const Rational a = abs(c);
        if (a != 1)
            os << (denominator(a) == 1 ? numerator(a).str() : rational_to_string(a)) << '*';
        os << stem << idx;
        first = false;
    };
    for (std::size_t k = 0; k < w.ldelta.size(); ++k) emit(w.ldelta[k], "iaB", k + 1);
    for (std::size_t k = 0; k < w.leps.size(); ++k) emit(w.leps[k], "iaF", k + 1);
    if (first) return "0";
    return os.str();
}

}  // namespace helgason
