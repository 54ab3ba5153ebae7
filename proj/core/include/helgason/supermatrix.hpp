#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "helgason/rational.hpp"

namespace helgason {

enum class Parity { even = 0, odd = 1 };

inline Parity operator+(Parity a, Parity b) {
    return (a == b) ? Parity::even : Parity::odd;
}

/// Superdimension (m|n) of the underlying space C^{m|n}.
struct SuperDims {
    std::size_t even_dim = 0;
    std::size_t odd_dim = 0;

    std::size_t total() const { return even_dim + odd_dim; }
    bool valid() const { return total() >= 1; }
    friend bool operator==(const SuperDims&, const SuperDims&) = default;
};

/// Dense (m+n)x(m+n) matrix over Q[i] with Z_2-block structure.
/// Row/column indices below m belong to the even block.
class SuperMatrix {
  public:
    SuperMatrix() = default;
    explicit SuperMatrix(SuperDims dims)
        : dims_(dims), entries_(dims.total() * dims.total()) {}

    /// Standard basis matrix E_{i,j} (1-based, as in the root tables).
    static SuperMatrix unit(SuperDims dims, std::size_t i, std::size_t j);

    static SuperMatrix identity(SuperDims dims);

    SuperDims dims() const { return dims_; }
    std::size_t size() const { return dims_.total(); }

    GaussianRational& at(std::size_t row, std::size_t col) {
        return entries_[row * size() + col];
    }
    const GaussianRational& at(std::size_t row, std::size_t col) const {
        return entries_[row * size() + col];
    }

    bool is_zero() const;

    /// True when the index pair (row, col) lies in the even (diagonal-block)
    /// part of the decomposition.
    bool index_even(std::size_t row, std::size_t col) const {
        return (row < dims_.even_dim) == (col < dims_.even_dim);
    }

    SuperMatrix even_part() const;
    SuperMatrix odd_part() const;

    /// Parity of a homogeneous matrix; nullopt when the matrix is zero or
    /// mixes both blocks.
    std::optional<Parity> parity() const;

    friend SuperMatrix operator+(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator-(const SuperMatrix& a, const SuperMatrix& b);
    friend SuperMatrix operator-(const SuperMatrix& a);
    friend SuperMatrix operator*(const GaussianRational& c, const SuperMatrix& a);
    friend SuperMatrix operator*(const SuperMatrix& a, const SuperMatrix& b);
    SuperMatrix& operator+=(const SuperMatrix& o) { return *this = *this + o; }
    friend bool operator==(const SuperMatrix& a, const SuperMatrix& b) {
        return a.dims_ == b.dims_ && a.entries_ == b.entries_;
    }

  private:
    SuperDims dims_;
    std::vector<GaussianRational> entries_;
};

/// Superbracket [x,y] = xy - (-1)^{|x||y|} yx of homogeneous matrices.
/// Throws on dimension mismatch or non-homogeneous input (the zero matrix
/// counts as homogeneous of either parity).
SuperMatrix bracket(const SuperMatrix& x, const SuperMatrix& y);

/// str(x) = tr(A) - tr(D) over the block decomposition.
GaussianRational supertrace(const SuperMatrix& x);

/// Matrix of x -> [h,x] in the given basis; h must be even and the span of
/// the basis ad(h)-invariant. Entry (j,k) is the coefficient of basis[j] in
/// [h, basis[k]]. Throws when some [h, basis_k] leaves the span.
std::vector<std::vector<GaussianRational>> ad_matrix(
    const SuperMatrix& h, const std::vector<SuperMatrix>& basis);

}  // namespace helgason
