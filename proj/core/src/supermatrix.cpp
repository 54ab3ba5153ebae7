#include "helgason/supermatrix.hpp"

#include <stdexcept>

#include "helgason/linalg.hpp"

namespace helgason {

SuperMatrix SuperMatrix::unit(SuperDims dims, std::size_t i, std::size_t j) {
    if (i < 1 || j < 1 || i > dims.total() || j > dims.total())
        throw std::out_of_range("SuperMatrix::unit: index out of range");
    SuperMatrix m(dims);
    m.at(i - 1, j - 1) = GaussianRational(1);
    return m;
}

SuperMatrix SuperMatrix::identity(SuperDims dims) {
    SuperMatrix m(dims);
    for (std::size_t k = 0; k < dims.total(); ++k) m.at(k, k) = GaussianRational(1);
    return m;
}

bool SuperMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

SuperMatrix SuperMatrix::even_part() const {
    SuperMatrix m(dims_);
    for (std::size_t r = 0; r < size(); ++r)
        for (std::size_t c = 0; c < size(); ++c)
            if (index_even(r, c)) m.at(r, c) = at(r, c);
    return m;
}

SuperMatrix SuperMatrix::odd_part() const {
    SuperMatrix m(dims_);
    for (std::size_t r = 0; r < size(); ++r)
        for (std::size_t c = 0; c < size(); ++c)
            if (!index_even(r, c)) m.at(r, c) = at(r, c);
    return m;
}

std::optional<Parity> SuperMatrix::parity() const {
    bool has_even = false, has_odd = false;
    for (std::size_t r = 0; r < size(); ++r)
        for (std::size_t c = 0; c < size(); ++c)
            if (!at(r, c).is_zero()) (index_even(r, c) ? has_even : has_odd) = true;
    if (has_even == has_odd) return std::nullopt;  // zero or mixed
    return has_even ? Parity::even : Parity::odd;
}

SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b) {
    if (!(a.dims_ == b.dims_)) throw std::invalid_argument("SuperMatrix: dimension mismatch");
    SuperMatrix m(a.dims_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        m.entries_[k] = a.entries_[k] + b.entries_[k];
    return m;
}

SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b) {
    if (!(a.dims_ == b.dims_)) throw std::invalid_argument("SuperMatrix: dimension mismatch");
    SuperMatrix m(a.dims_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
        m.entries_[k] = a.entries_[k] - b.entries_[k];
    return m;
}

SuperMatrix operator-(const SuperMatrix& a) {
    SuperMatrix m(a.dims_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) m.entries_[k] = -a.entries_[k];
    return m;
}

SuperMatrix operator*(const GaussianRational& c, const SuperMatrix& a) {
    SuperMatrix m(a.dims_);
    for (std::size_t k = 0; k < a.entries_.size(); ++k) m.entries_[k] = c * a.entries_[k];
    return m;
}

SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b) {
    if (!(a.dims_ == b.dims_)) throw std::invalid_argument("SuperMatrix: dimension mismatch");
    const std::size_t n = a.size();
    SuperMatrix m(a.dims_);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k < n; ++k) {
            if (a.at(r, k).is_zero()) continue;
            for (std::size_t c = 0; c < n; ++c) {
                if (b.at(k, c).is_zero()) continue;
                m.at(r, c) += a.at(r, k) * b.at(k, c);
            }
        }
    return m;
}

SuperMatrix bracket(const SuperMatrix& x, const SuperMatrix& y) {
    if (!(x.dims() == y.dims())) throw std::invalid_argument("bracket: dimension mismatch");
    const auto px = x.parity();
    const auto py = y.parity();
    if (x.is_zero() || y.is_zero()) return SuperMatrix(x.dims());
    if (!px || !py) throw std::invalid_argument("bracket: non-homogeneous input");
    const bool sign_flip = (*px == Parity::odd && *py == Parity::odd);
    SuperMatrix xy = x * y;
    SuperMatrix yx = y * x;
    return sign_flip ? xy + yx : xy - yx;
}

GaussianRational supertrace(const SuperMatrix& x) {
    GaussianRational s;
    for (std::size_t k = 0; k < x.size(); ++k) {
        if (k < x.dims().even_dim)
            s += x.at(k, k);
        else
            s -= x.at(k, k);
    }
    return s;
}

std::vector<std::vector<GaussianRational>> ad_matrix(
    const SuperMatrix& h, const std::vector<SuperMatrix>& basis) {
    if (h.parity() && *h.parity() == Parity::odd)
        throw std::invalid_argument("ad_matrix: h must be even");
    const std::size_t n2 = h.size() * h.size();
    // Columns of the solve: flattened basis matrices.
    linalg::Matrix cols(n2, linalg::Vector(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k)
        for (std::size_t r = 0; r < h.size(); ++r)
            for (std::size_t c = 0; c < h.size(); ++c)
                cols[r * h.size() + c][k] = basis[k].at(r, c);

    // One elimination for all brackets at once: rhs column k flattens
    // [h, basis_k].
    linalg::Matrix rhs(n2, linalg::Vector(basis.size()));
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const SuperMatrix b = bracket(h, basis[k]);
        for (std::size_t r = 0; r < h.size(); ++r)
            for (std::size_t c = 0; c < h.size(); ++c)
                rhs[r * h.size() + c][k] = b.at(r, c);
    }
    auto coeffs = linalg::solve_columns(cols, rhs);
    if (!coeffs)
        throw std::domain_error("ad_matrix: [h, basis_k] not expressible in the basis");
    return *std::move(coeffs);
}

}  // namespace helgason
