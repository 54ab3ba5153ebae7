#include "helgason/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace helgason::linalg {

Matrix identity_matrix(std::size_t n) {
    Matrix m(n, Vector(n));
    for (std::size_t k = 0; k < n; ++k) m[k][k] = GaussianRational(1);
    return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
    if (a.empty() || b.empty()) return {};
    const std::size_t n = a.size(), k = b.size(), p = b[0].size();
    Matrix m(n, Vector(p));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (a[i][j].is_zero()) continue;
            for (std::size_t c = 0; c < p; ++c) m[i][c] += a[i][j] * b[j][c];
        }
    return m;
}

Vector mat_vec(const Matrix& a, const Vector& v) {
    Vector out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!a[i][j].is_zero() && !v[j].is_zero()) out[i] += a[i][j] * v[j];
    return out;
}

std::vector<std::size_t> rref(Matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t k = r; k < rows; ++k)
            if (!m[k][c].is_zero()) {
                pivot = k;
                break;
            }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        const GaussianRational inv = GaussianRational(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (std::size_t k = 0; k < rows; ++k) {
            if (k == r || m[k][c].is_zero()) continue;
            const GaussianRational f = m[k][c];
            for (std::size_t j = c; j < cols; ++j) m[k][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::size_t rank(Matrix m) { return rref(m).size(); }

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
    if (a.empty()) return b.empty() || std::all_of(b.begin(), b.end(), [](const auto& x) {
                              return x.is_zero();
                          })
                          ? std::optional<Vector>(Vector{})
                          : std::nullopt;
    const std::size_t rows = a.size(), cols = a[0].size();
    Matrix aug(rows, Vector(cols + 1));
    for (std::size_t i = 0; i < rows; ++i) {
        std::copy(a[i].begin(), a[i].end(), aug[i].begin());
        aug[i][cols] = b[i];
    }
    const auto pivots = rref(aug);
    // Inconsistent if the last column is a pivot.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    Vector x(cols);
    for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = aug[k][cols];
    return x;
}

std::optional<Matrix> solve_columns(const Matrix& a, const Matrix& rhs) {
    if (a.empty()) {
        for (const auto& row : rhs)
            for (const auto& x : row)
                if (!x.is_zero()) return std::nullopt;
        return Matrix{};
    }
    const std::size_t rows = a.size(), cols = a[0].size(), nrhs = rhs[0].size();
    Matrix aug(rows, Vector(cols + nrhs));
    for (std::size_t i = 0; i < rows; ++i) {
        std::copy(a[i].begin(), a[i].end(), aug[i].begin());
        std::copy(rhs[i].begin(), rhs[i].end(), aug[i].begin() + static_cast<long>(cols));
    }
    const auto pivots = rref(aug);
    for (auto c : pivots)
        if (c >= cols) return std::nullopt;
    Matrix x(cols, Vector(nrhs));
    for (std::size_t k = 0; k < pivots.size(); ++k)
        for (std::size_t j = 0; j < nrhs; ++j) x[pivots[k]][j] = aug[k][cols + j];
    return x;
}

std::vector<Vector> nullspace(const Matrix& a) {
    if (a.empty()) return {};
    const std::size_t cols = a[0].size();
    Matrix m = a;
    const auto pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vector v(cols);
        v[free_col] = GaussianRational(1);
        for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m[k][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> inverse(const Matrix& a) {
    const std::size_t n = a.size();
    Matrix aug(n, Vector(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        std::copy(a[i].begin(), a[i].end(), aug[i].begin());
        aug[i][n + i] = GaussianRational(1);
    }
    const auto pivots = rref(aug);
    if (pivots.size() != n || pivots.back() != n - 1) return std::nullopt;
    Matrix inv(n, Vector(n));
    for (std::size_t i = 0; i < n; ++i)
        std::copy(aug[i].begin() + static_cast<long>(n), aug[i].end(), inv[i].begin());
    return inv;
}

Poly poly_normalize(Poly p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
    return p;
}

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return poly_normalize(out);
}

Poly poly_derivative(const Poly& p) {
    Poly out;
    for (std::size_t k = 1; k < p.size(); ++k) out.push_back(GaussianRational(int(k)) * p[k]);
    return poly_normalize(out);
}

GaussianRational poly_eval(const Poly& p, const GaussianRational& x) {
    GaussianRational acc;
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Poly poly_mod(Poly a, const Poly& b) {
    a = poly_normalize(std::move(a));
    if (b.empty()) throw std::domain_error("poly_mod: division by zero polynomial");
    while (a.size() >= b.size()) {
        const GaussianRational f = a.back() / b.back();
        const std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
        a = poly_normalize(std::move(a));
        if (a.empty()) break;
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b) {
    a = poly_normalize(std::move(a));
    b = poly_normalize(std::move(b));
    while (!b.empty()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const GaussianRational inv = GaussianRational(1) / a.back();
        for (auto& c : a) c *= inv;
    }
    return a;
}

bool is_squarefree(const Poly& p) {
    const Poly g = poly_gcd(p, poly_derivative(p));
    return g.size() <= 1;
}

Poly minimal_polynomial(const Matrix& a) {
    const std::size_t n = a.size();
    const std::size_t n2 = n * n;
    std::vector<Vector> powers;  // flattened I, A, A^2, ...
    Matrix cur = identity_matrix(n);
    auto flatten = [n, n2](const Matrix& m) {
        Vector v(n2);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v[i * n + j] = m[i][j];
        return v;
    };
    powers.push_back(flatten(cur));
    for (std::size_t deg = 1; deg <= n; ++deg) {
        cur = mat_mul(cur, a);
        const Vector target = flatten(cur);
        // Columns: previous powers; solve for coefficients.
        Matrix sys(n2, Vector(deg));
        for (std::size_t r = 0; r < n2; ++r)
            for (std::size_t c = 0; c < deg; ++c) sys[r][c] = powers[c][r];
        if (const auto coeffs = solve(sys, target)) {
            Poly p(deg + 1);
            for (std::size_t k = 0; k < deg; ++k) p[k] = -(*coeffs)[k];
            p[deg] = GaussianRational(1);
            return p;
        }
        powers.push_back(target);
    }
    throw std::logic_error("minimal_polynomial: no annihilating polynomial found");
}

namespace {

struct GaussInt {
    Integer re, im;
    Integer norm() const { return re * re + im * im; }
};

bool divides(const GaussInt& d, const GaussInt& z) {
    const Integer n = d.norm();
    if (n == 0) return false;
    // z * conj(d) must have both components divisible by N(d).
    const Integer re = z.re * d.re + z.im * d.im;
    const Integer im = z.im * d.re - z.re * d.im;
    return re % n == 0 && im % n == 0;
}

std::vector<GaussInt> gauss_divisors(const GaussInt& z) {
    std::vector<GaussInt> out;
    const Integer n = z.norm();
    if (n == 0) return out;
    Integer limit = boost::multiprecision::sqrt(n);
    for (Integer a = -limit; a <= limit; ++a)
        for (Integer b = -limit; b <= limit; ++b) {
            GaussInt d{a, b};
            const Integer dn = d.norm();
            if (dn == 0 || n % dn != 0) continue;
            if (divides(d, z)) out.push_back(d);
        }
    return out;
}

}  // namespace

std::vector<GaussianRational> gaussian_rational_roots(const Poly& p_in) {
    Poly p = poly_normalize(p_in);
    std::vector<GaussianRational> roots;
    if (p.size() <= 1) return roots;
    std::size_t low = 0;
    while (low < p.size() && p[low].is_zero()) ++low;
    if (low > 0) {
        roots.emplace_back(0);
        p.erase(p.begin(), p.begin() + static_cast<long>(low));
    }
    if (p.size() <= 1) return roots;
    // Clear denominators to land in Z[i].
    Integer den = 1;
    for (const auto& c : p)
        den = boost::multiprecision::lcm(
            den, boost::multiprecision::lcm(denominator(c.re), denominator(c.im)));
    std::vector<GaussInt> zc;
    for (const auto& c : p)
        zc.push_back({numerator(c.re) * (den / denominator(c.re)),
                      numerator(c.im) * (den / denominator(c.im))});
    const auto us = gauss_divisors(zc.front());
    const auto vs = gauss_divisors(zc.back());
    for (const auto& u : us)
        for (const auto& v : vs) {
            const Integer vn = v.norm();
            const GaussianRational cand{Rational(u.re * v.re + u.im * v.im, vn),
                                        Rational(u.im * v.re - u.re * v.im, vn)};
            if (!poly_eval(p, cand).is_zero()) continue;
            if (std::find(roots.begin(), roots.end(), cand) == roots.end())
                roots.push_back(cand);
        }
    return roots;
}

bool splits_simply(const Poly& p_in, std::vector<GaussianRational>* roots) {
    const Poly p = poly_normalize(p_in);
    if (p.empty() || !(p.back() == GaussianRational(1))) return false;
    if (!is_squarefree(p)) return false;
    auto r = gaussian_rational_roots(p);
    if (r.size() + 1 != p.size()) return false;
    Poly prod{GaussianRational(1)};
    for (const auto& root : r) prod = poly_mul(prod, Poly{-root, GaussianRational(1)});
    if (!(prod == p)) return false;
    if (roots) *roots = std::move(r);
    return true;
}

}  // namespace helgason::linalg
