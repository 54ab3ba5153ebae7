#include "helgason/roots.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "helgason/linalg.hpp"

namespace helgason {

namespace {

// Entry c * E_{i,j} (1-based indices) for assembling table vectors.
struct Term {
    GaussianRational c;
    std::size_t i;
    std::size_t j;
};

SuperMatrix make_vec(SuperDims dims, std::initializer_list<Term> terms) {
    SuperMatrix m(dims);
    for (const auto& t : terms) m.at(t.i - 1, t.j - 1) += t.c;
    return m;
}

void assert_eigen(const PairData& pair, const HWeight& root, const SuperMatrix& vec,
                  const std::string& tag) {
    for (std::size_t pos = 0; pos < pair.h_basis.size(); ++pos) {
        const GaussianRational val =
            evaluate(root, pair.params, h_basis_slot(pair.params, pos));
        if (!(bracket(pair.h_basis[pos], vec) == val * vec))
            throw std::logic_error("full_root_table: row " + tag +
                                   " is not an eigenvector of the h-basis element at slot " +
                                   std::to_string(pos));
    }
}

}  // namespace

std::vector<FullRootDatum> full_root_table(const PairData& pair) {
    const std::size_t p = pair.params.p, q = pair.params.q, r = pair.params.r,
                      s = pair.params.s;
    const std::size_t nd = p + q, ne = r + s;
    const SuperDims dims = pair.dims;
    const GaussianRational one(1), I = GaussianRational::i();

    std::vector<FullRootDatum> out;
    auto push = [&](HWeight root, SuperMatrix vec, Parity parity, std::string tag) {
        FullRootDatum d{std::move(root), parity, std::move(vec), std::move(tag)};
        assert_eigen(pair, d.root, d.root_vector, d.table_tag);
        out.push_back(std::move(d));
    };
    auto dlt = [&](std::size_t k) { return delta_basis(nd, ne, k); };
    auto eps = [&](std::size_t k) { return eps_basis(nd, ne, k); };

    // Boson-boson block.
    for (std::size_t i = q + 1; i <= p; ++i)
        for (std::size_t j = 1; j <= q; ++j)
            for (int sg : {+1, -1}) {
                const GaussianRational si = sg > 0 ? I : -I;
                push(dlt(i) - dlt(sg > 0 ? j : p + j),
                     make_vec(dims, {{one, i, j}, {si, i, j + p}}), Parity::even, "BB1");
            }
    for (std::size_t i = 1; i <= q; ++i)
        for (std::size_t j = q + 1; j <= p; ++j)
            for (int sg : {+1, -1}) {
                const GaussianRational si = sg > 0 ? I : -I;
                push(dlt(sg > 0 ? p + i : i) - dlt(j),
                     make_vec(dims, {{one, i, j}, {si, i + p, j}}), Parity::even, "BB2");
            }
    for (std::size_t i = 1; i <= q; ++i)
        for (std::size_t j = 1; j <= q; ++j) {
            if (i == j) continue;
            for (int sg : {+1, -1}) {
                const GaussianRational si = sg > 0 ? I : -I;
                push(sg > 0 ? dlt(p + i) - dlt(p + j) : dlt(i) - dlt(j),
                     make_vec(dims, {{one, i, j},
                                     {one, i + p, j + p},
                                     {si, i + p, j},
                                     {-si, i, j + p}}),
                     Parity::even, "BB3");
            }
        }
    for (std::size_t i = 1; i <= q; ++i)
        for (std::size_t j = 1; j <= q; ++j)
            for (int sg : {+1, -1}) {
                const GaussianRational si = sg > 0 ? I : -I;
                push(sg > 0 ? dlt(p + i) - dlt(j) : dlt(i) - dlt(p + j),
                     make_vec(dims, {{one, i, j},
                                     {-one, i + p, j + p},
                                     {si, i + p, j},
                                     {si, i, j + p}}),
                     Parity::even, "BB4");
            }
    for (std::size_t i = q + 1; i <= p; ++i)
        for (std::size_t j = q + 1; j <= p; ++j) {
            if (i == j) continue;
            push(dlt(i) - dlt(j), make_vec(dims, {{one, i, j}}), Parity::even, "BB5");
        }

    // Fermion-fermion block (B -> F, p -> r, q -> s, offset p+q).
    const std::size_t o = p + q;
    for (std::size_t i = s + 1; i <= r; ++i)
        for (std::size_t j = 1; j <= s; ++j)
            for (int sg : {+1, -1}) {
                const GaussianRational si = sg > 0 ? I : -I;
                push(eps(i) - eps(sg > 0 ? j : r + j),
                     make_vec(dims, {{one, o + i, o + j}, {si, o + i, o + j + r}}),
                     Parity::even, "FF1");
            }
    for (std::size_t i = 1; i <= s; ++i)
        for (std::size_t j = s + 1; j <= r; ++j)
            for (int sg : {+1, -1}) {
                const GaussianRational si = sg > 0 ? I : -I;
                push(eps(sg > 0 ? r + i : i) - eps(j),
                     make_vec(dims, {{one, o + i, o + j}, {si, o + i + r, o + j}}),
                     Parity::even, "FF2");
            }
    for (std::size_t i = 1; i <= s; ++i)
        for (std::size_t j = 1; j <= s; ++j) {
            if (i == j) continue;
            for (int sg : {+1, -1}) {
                const GaussianRational si = sg > 0 ? I : -I;
                push(sg > 0 ? eps(r + i) - eps(r + j) : eps(i) - eps(j),
                     make_vec(dims, {{one, o + i, o + j},
                                     {one, o + i + r, o + j + r},
                                     {si, o + i + r, o + j},
                                     {-si, o + i, o + j + r}}),
                     Parity::even, "FF3");
            }
        }
    for (std::size_t i = 1; i <= s; ++i)
        for (std::size_t j = 1; j <= s; ++j)
            for (int sg : {+1, -1}) {
                const GaussianRational si = sg > 0 ? I : -I;
                push(sg > 0 ? eps(r + i) - eps(j) : eps(i) - eps(r + j),
                     make_vec(dims, {{one, o + i, o + j},
                                     {-one, o + i + r, o + j + r},
                                     {si, o + i + r, o + j},
                                     {si, o + i, o + j + r}}),
                     Parity::even, "FF4");
            }
    for (std::size_t i = s + 1; i <= r; ++i)
        for (std::size_t j = s + 1; j <= r; ++j) {
            if (i == j) continue;
            push(eps(i) - eps(j), make_vec(dims, {{one, o + i, o + j}}), Parity::even, "FF5");
        }

    // Boson-fermion block. (The second row family's imaginary part carries
    // a plus sign between its two entries; see the notes on the source
    // tables in the repository docs.)
    for (std::size_t i = 1; i <= q; ++i)
        for (std::size_t j = 1; j <= s; ++j)
            for (int sg : {+1, -1}) {
                const GaussianRational si = sg > 0 ? I : -I;
                push(sg > 0 ? dlt(p + i) - eps(r + j) : dlt(i) - eps(j),
                     make_vec(dims, {{one, i, o + j},
                                     {one, i + p, o + j + r},
                                     {si, i + p, o + j},
                                     {-si, i, o + j + r}}),
                     Parity::odd, "BF1");
            }
    for (std::size_t i = 1; i <= q; ++i)
        for (std::size_t j = 1; j <= s; ++j)
            for (int sg : {+1, -1}) {
                const GaussianRational si = sg > 0 ? I : -I;
                push(sg > 0 ? dlt(p + i) - eps(j) : dlt(i) - eps(r + j),
                     make_vec(dims, {{one, i, o + j},
                                     {-one, i + p, o + j + r},
                                     {si, i + p, o + j},
                                     {si, i, o + j + r}}),
                     Parity::odd, "BF2");
            }
    for (std::size_t i = 1; i <= q; ++i)
        for (std::size_t j = s + 1; j <= r; ++j)
            for (int sg : {+1, -1}) {
                const GaussianRational si = sg > 0 ? I : -I;
                push((sg > 0 ? dlt(p + i) : dlt(i)) - eps(j),
                     make_vec(dims, {{one, i, o + j}, {si, i + p, o + j}}), Parity::odd,
                     "BF3");
            }
    for (std::size_t i = q + 1; i <= p; ++i)
        for (std::size_t j = 1; j <= s; ++j)
            for (int sg : {+1, -1}) {
                const GaussianRational si = sg > 0 ? I : -I;
                push(dlt(i) - eps(sg > 0 ? j : r + j),
                     make_vec(dims, {{one, i, o + j}, {si, i, o + j + r}}), Parity::odd,
                     "BF4");
            }
    for (std::size_t i = q + 1; i <= p; ++i)
        for (std::size_t j = s + 1; j <= r; ++j)
            push(dlt(i) - eps(j), make_vec(dims, {{one, i, o + j}}), Parity::odd, "BF5");

    // Fermion-boson block (same convention for the second row family).
    for (std::size_t i = 1; i <= s; ++i)
        for (std::size_t j = 1; j <= q; ++j)
            for (int sg : {+1, -1}) {
                const GaussianRational si = sg > 0 ? I : -I;
                push(sg > 0 ? eps(r + i) - dlt(p + j) : eps(i) - dlt(j),
                     make_vec(dims, {{one, o + i, j},
                                     {one, o + i + r, j + p},
                                     {si, o + i + r, j},
                                     {-si, o + i, j + p}}),
                     Parity::odd, "FB1");
            }
    for (std::size_t i = 1; i <= s; ++i)
        for (std::size_t j = 1; j <= q; ++j)
            for (int sg : {+1, -1}) {
                const GaussianRational si = sg > 0 ? I : -I;
                push(sg > 0 ? eps(r + i) - dlt(j) : eps(i) - dlt(p + j),
                     make_vec(dims, {{one, o + i, j},
                                     {-one, o + i + r, j + p},
                                     {si, o + i + r, j},
                                     {si, o + i, j + p}}),
                     Parity::odd, "FB2");
            }
    for (std::size_t i = 1; i <= s; ++i)
        for (std::size_t j = q + 1; j <= p; ++j)
            for (int sg : {+1, -1}) {
                const GaussianRational si = sg > 0 ? I : -I;
                push((sg > 0 ? eps(r + i) : eps(i)) - dlt(j),
                     make_vec(dims, {{one, o + i, j}, {si, o + i + r, j}}), Parity::odd,
                     "FB3");
            }
    for (std::size_t i = s + 1; i <= r; ++i)
        for (std::size_t j = 1; j <= q; ++j)
            for (int sg : {+1, -1}) {
                const GaussianRational si = sg > 0 ? I : -I;
                push(eps(i) - dlt(sg > 0 ? j : p + j),
                     make_vec(dims, {{one, o + i, j}, {si, o + i, j + p}}), Parity::odd,
                     "FB4");
            }
    for (std::size_t i = s + 1; i <= r; ++i)
        for (std::size_t j = q + 1; j <= p; ++j)
            push(eps(i) - dlt(j), make_vec(dims, {{one, o + i, j}}), Parity::odd, "FB5");

    const std::size_t n = pair.dims.total();
    if (out.size() != n * n - n)
        throw std::logic_error("full_root_table: expected " + std::to_string(n * n - n) +
                               " roots, built " + std::to_string(out.size()));
    return out;
}

namespace {

using linalg::Matrix;
using linalg::Vector;

// h-basis elements as plain matrices acting on C^N.
Matrix as_plain_matrix(const SuperMatrix& m) {
    const std::size_t n = m.size();
    Matrix out(n, Vector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i][j] = m.at(i, j);
    return out;
}

// Joint eigenspace of C^N under all h, refined one h at a time. Each
// subspace carries its eigenvalue tuple (one entry per processed h).
struct JointSpace {
    std::vector<Vector> basis;
    std::vector<GaussianRational> eigenvalues;
};

std::vector<JointSpace> joint_eigenspaces(const std::vector<Matrix>& hs, std::size_t n,
                                          std::vector<std::string>* mismatches) {
    std::vector<JointSpace> spaces(1);
    spaces[0].basis = linalg::identity_matrix(n);
    for (const Matrix& h : hs) {
        std::vector<JointSpace> next;
        for (const JointSpace& sp : spaces) {
            const std::size_t k = sp.basis.size();
            // Matrix of h restricted to the subspace: h b_j = sum_i M_ij b_i.
            Matrix cols(n, Vector(k));
            for (std::size_t j = 0; j < k; ++j)
                for (std::size_t i = 0; i < n; ++i) cols[i][j] = sp.basis[j][i];
            Matrix restricted(k, Vector(k));
            for (std::size_t j = 0; j < k; ++j) {
                Vector hb(n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t l = 0; l < n; ++l) hb[i] += h[i][l] * sp.basis[j][l];
                const auto coeffs = linalg::solve(cols, hb);
                if (!coeffs) {
                    mismatches->push_back("subspace not invariant under an h-basis element");
                    return {};
                }
                for (std::size_t i = 0; i < k; ++i) restricted[i][j] = (*coeffs)[i];
            }
            const auto minpoly = linalg::minimal_polynomial(restricted);
            std::vector<GaussianRational> eigs;
            if (!linalg::splits_simply(minpoly, &eigs)) {
                mismatches->push_back(
                    "minimal polynomial of a restricted h-action does not split simply "
                    "over Q[i]");
                return {};
            }
            std::size_t claimed = 0;
            for (const auto& mu : eigs) {
                Matrix shifted = restricted;
                for (std::size_t d = 0; d < k; ++d) shifted[d][d] -= mu;
                JointSpace child;
                for (const Vector& c : linalg::nullspace(shifted)) {
                    Vector v(n);
                    for (std::size_t j = 0; j < k; ++j)
                        for (std::size_t i = 0; i < n; ++i) v[i] += c[j] * sp.basis[j][i];
                    child.basis.push_back(std::move(v));
                }
                child.eigenvalues = sp.eigenvalues;
                child.eigenvalues.push_back(mu);
                claimed += child.basis.size();
                next.push_back(std::move(child));
            }
            if (claimed != k) {
                mismatches->push_back("eigenspace dimensions do not add up on a subspace");
                return {};
            }
        }
        spaces = std::move(next);
    }
    return spaces;
}

}  // namespace

RootOracleReport oracle_verify_roots(const PairData& pair) {
    RootOracleReport report;
    const std::size_t n = pair.dims.total();
    const std::size_t nd = pair.params.p + pair.params.q;
    const std::size_t ne = pair.params.r + pair.params.s;
    const std::size_t hsz = pair.h_basis.size();

    std::vector<Matrix> hs;
    hs.reserve(hsz);
    for (const auto& h : pair.h_basis) hs.push_back(as_plain_matrix(h));

    const auto spaces = joint_eigenspaces(hs, n, &report.mismatches);
    if (spaces.empty() && n > 0) return report;
    if (spaces.size() != n) {
        report.mismatches.push_back("joint refinement of C^N produced " +
                                    std::to_string(spaces.size()) + " lines, expected " +
                                    std::to_string(n));
        return report;
    }

    // Match each line's eigenvalue tuple to a delta/eps symbol.
    std::vector<HWeight> symbols;
    for (std::size_t k = 1; k <= nd; ++k) symbols.push_back(delta_basis(nd, ne, k));
    for (std::size_t k = 1; k <= ne; ++k) symbols.push_back(eps_basis(nd, ne, k));
    std::vector<std::size_t> symbol_of_line(n, n + 1);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t sidx = 0; sidx < symbols.size(); ++sidx) {
            bool all = true;
            for (std::size_t pos = 0; pos < hsz; ++pos)
                if (!(evaluate(symbols[sidx], pair.params, h_basis_slot(pair.params, pos)) ==
                      spaces[a].eigenvalues[pos])) {
                    all = false;
                    break;
                }
            if (all) {
                symbol_of_line[a] = sidx;
                break;
            }
        }
        if (symbol_of_line[a] > n) {
            report.mismatches.push_back(
                "joint eigenvalue tuple of line " + std::to_string(a) +
                " matches no delta/eps symbol functional");
            return report;
        }
    }
    {
        auto sorted = symbol_of_line;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t k = 0; k < n; ++k)
            if (sorted[k] != k) {
                report.mismatches.push_back("symbol functionals are not matched bijectively");
                return report;
            }
    }

    // Dual basis: rows of the inverse of the eigenvector matrix.
    Matrix u(n, Vector(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < n; ++i) u[i][a] = spaces[a].basis[0][i];
    const auto w = linalg::inverse(u);
    if (!w) {
        report.mismatches.push_back("joint eigenvectors are not linearly independent");
        return report;
    }

    const auto table = full_root_table(pair);
    if (table.size() != n * n - n) {
        report.mismatches.push_back("table has wrong cardinality");
        return report;
    }

    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (a == b) continue;
            const HWeight root = symbols[symbol_of_line[a]] - symbols[symbol_of_line[b]];
            SuperMatrix x(pair.dims);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) x.at(i, j) = u[i][a] * (*w)[b][j];
            const FullRootDatum* match = nullptr;
            for (const auto& d : table)
                if (d.root == root) {
                    if (match) {
                        report.mismatches.push_back("eigenfunctional " +
                                                    hweight_to_string(root) +
                                                    " listed more than once in the table");
                        return report;
                    }
                    match = &d;
                }
            if (!match) {
                report.mismatches.push_back("eigenfunctional " + hweight_to_string(root) +
                                            " missing from the table");
                continue;
            }
            // One-dimensional spaces: vectors must be proportional.
            GaussianRational ratio;
            bool found = false;
            for (std::size_t i = 0; i < n && !found; ++i)
                for (std::size_t j = 0; j < n && !found; ++j)
                    if (!x.at(i, j).is_zero()) {
                        ratio = match->root_vector.at(i, j) / x.at(i, j);
                        found = true;
                    }
            if (!found || ratio.is_zero() || !(ratio * x == match->root_vector)) {
                report.mismatches.push_back("root-vector span mismatch at eigenfunctional " +
                                            hweight_to_string(root));
                continue;
            }
            const auto parity = x.parity();
            if (!parity || *parity != match->parity) {
                report.mismatches.push_back("parity mismatch at eigenfunctional " +
                                            hweight_to_string(root));
                continue;
            }
            report.root_space_count += 1;
        }

    // Independent bookkeeping: the zero-weight space is the joint kernel of
    // all ad(h) on the full E_{i,j} basis.
    {
        std::vector<SuperMatrix> full_basis;
        for (std::size_t i = 1; i <= n; ++i)
            for (std::size_t j = 1; j <= n; ++j)
                full_basis.push_back(SuperMatrix::unit(pair.dims, i, j));
        Matrix stacked;
        for (const auto& h : pair.h_basis) {
            const auto adh = ad_matrix(h, full_basis);
            for (const auto& row : adh) stacked.push_back(row);
        }
        report.zero_weight_dim = stacked.empty() ? n * n : linalg::nullspace(stacked).size();
    }
    report.total_dim = report.root_space_count + report.zero_weight_dim;
    if (report.total_dim != n * n)
        report.mismatches.push_back("dimension bookkeeping failed: " +
                                    std::to_string(report.root_space_count) + " + " +
                                    std::to_string(report.zero_weight_dim) +
                                    " != " + std::to_string(n * n));
    report.ok = report.mismatches.empty();
    return report;
}

namespace {

bool astar_less(const AStarWeight& a, const AStarWeight& b) {
    if (a.ldelta != b.ldelta)
        return std::lexicographical_compare(a.ldelta.begin(), a.ldelta.end(),
                                            b.ldelta.begin(), b.ldelta.end());
    return std::lexicographical_compare(a.leps.begin(), a.leps.end(), b.leps.begin(),
                                        b.leps.end());
}

// c with b = c*a for some c > 0, if any.
std::optional<Rational> positive_ratio(const AStarWeight& a, const AStarWeight& b) {
    Rational c = 0;
    auto scan = [&](const std::vector<Rational>& xa, const std::vector<Rational>& xb) {
        for (std::size_t k = 0; k < xa.size(); ++k)
            if (xa[k] != 0 && c == 0) c = xb[k] / xa[k];
    };
    scan(a.ldelta, b.ldelta);
    scan(a.leps, b.leps);
    if (c <= 0) return std::nullopt;
    if (!(c * a == b)) return std::nullopt;
    return c;
}

}  // namespace

std::vector<RestrictedRootDatum> restricted_root_data(const PairData& pair) {
    struct Counts {
        std::size_t even = 0, odd = 0;
    };
    std::vector<std::pair<AStarWeight, Counts>> groups;
    for (const auto& d : full_root_table(pair)) {
        const AStarWeight res = restrict_weight(d.root, pair.params);
        if (res.is_zero()) continue;
        auto it = std::find_if(groups.begin(), groups.end(),
                               [&](const auto& g) { return g.first == res; });
        if (it == groups.end()) {
            groups.push_back({res, Counts{}});
            it = std::prev(groups.end());
        }
        (d.parity == Parity::even ? it->second.even : it->second.odd) += 1;
    }
    std::sort(groups.begin(), groups.end(),
              [](const auto& a, const auto& b) { return astar_less(a.first, b.first); });

    std::vector<RestrictedRootDatum> out;
    for (const auto& [root, counts] : groups) {
        RestrictedRootDatum d;
        d.root = root;
        d.even_dim = counts.even;
        d.odd_dim = counts.odd;
        d.m = static_cast<long long>(counts.even) - static_cast<long long>(counts.odd);
        d.isotropic = pairing(root, root) == 0;
        out.push_back(d);
    }
    for (auto& d : out) {
        const AStarWeight half = Rational(1, 2) * d.root;
        const AStarWeight twice = Rational(2) * d.root;
        d.indivisible = true;
        d.has_double = false;
        d.m_double = 0;
        for (const auto& other : out) {
            if (other.root == half) d.indivisible = false;
            if (other.root == twice) {
                d.has_double = true;
                d.m_double = other.m;
            }
        }
    }
    return out;
}

std::vector<AStarWeight> sigma_plus_pattern(const PairParams& params) {
    std::vector<AStarWeight> out;
    const std::size_t q = params.q, s = params.s;
    for (std::size_t i = 1; i <= q; ++i) {
        out.push_back(ia_b(params, i));
        out.push_back(Rational(2) * ia_b(params, i));
    }
    for (std::size_t i = 1; i <= q; ++i)
        for (std::size_t k = i + 1; k <= q; ++k) {
            out.push_back(ia_b(params, i) - ia_b(params, k));
            out.push_back(ia_b(params, i) + ia_b(params, k));
        }
    for (std::size_t j = 1; j <= s; ++j) {
        out.push_back(ia_f(params, j));
        out.push_back(Rational(2) * ia_f(params, j));
    }
    for (std::size_t j = 1; j <= s; ++j)
        for (std::size_t l = j + 1; l <= s; ++l) {
            out.push_back(ia_f(params, j) - ia_f(params, l));
            out.push_back(ia_f(params, j) + ia_f(params, l));
        }
    for (std::size_t i = 1; i <= q; ++i)
        for (std::size_t j = 1; j <= s; ++j) {
            out.push_back(ia_b(params, i) - ia_f(params, j));
            out.push_back(ia_b(params, i) + ia_f(params, j));
        }
    return out;
}

std::optional<RestrictedRootDatum> find_root(const std::vector<RestrictedRootDatum>& system,
                                             const AStarWeight& root) {
    for (const auto& d : system)
        if (d.root == root) return d;
    return std::nullopt;
}

std::vector<RestrictedRootDatum> positive_restricted_system(const PairData& pair) {
    const auto sigma = restricted_root_data(pair);
    std::vector<RestrictedRootDatum> out;
    for (const auto& candidate : sigma_plus_pattern(pair.params))
        if (const auto d = find_root(sigma, candidate)) out.push_back(*d);
    return out;
}

AStarWeight weyl_vector(const std::vector<RestrictedRootDatum>& sigma_plus) {
    AStarWeight acc;
    bool seeded = false;
    for (const auto& d : sigma_plus) {
        const AStarWeight term = Rational(d.m, 2) * d.root;
        if (!seeded) {
            acc = term;
            seeded = true;
        } else {
            acc = acc + term;
        }
    }
    return acc;
}

AStarWeight weyl_vector_supertrace(const PairData& pair) {
    const auto sigma_plus = positive_restricted_system(pair);
    const auto table = full_root_table(pair);
    AStarWeight out(pair.params.q, pair.params.s);
    const std::size_t q = pair.params.q, s = pair.params.s;
    for (std::size_t idx = 0; idx < q + s; ++idx) {
        const HBasisSlot slot = idx < q
                                    ? HBasisSlot{HBasisSlot::Kind::aB, idx + 1}
                                    : HBasisSlot{HBasisSlot::Kind::aF, idx - q + 1};
        GaussianRational acc;
        for (const auto& d : table) {
            const AStarWeight res = restrict_weight(d.root, pair.params);
            if (res.is_zero() || !find_root(sigma_plus, res)) continue;
            const GaussianRational val = evaluate(d.root, pair.params, slot);
            acc += d.parity == Parity::even ? val : -val;
        }
        acc = GaussianRational(Rational(1, 2)) * acc;
        if (acc.re != 0)
            throw std::logic_error("weyl_vector_supertrace: non-imaginary trace value");
        // rho(A(a_k)) = -2i * coefficient, so the coefficient is -im/2.
        const Rational coeff = -acc.im / 2;
        if (idx < q)
            out.ldelta[idx] = coeff;
        else
            out.leps[idx - q] = coeff;
    }
    return out;
}

std::vector<RestrictedRootDatum> simple_roots(const std::vector<RestrictedRootDatum>& phi) {
    std::vector<RestrictedRootDatum> out;
    for (const auto& alpha : phi) {
        bool is_sum = false;
        for (const auto& b : phi) {
            for (const auto& c : phi)
                if (b.root + c.root == alpha.root) {
                    is_sum = true;
                    break;
                }
            if (is_sum) break;
        }
        if (!is_sum) out.push_back(alpha);
    }
    return out;
}

std::vector<RestrictedRootDatum> flip_positive_system(
    const std::vector<RestrictedRootDatum>& phi, const RestrictedRootDatum& alpha,
    const std::vector<RestrictedRootDatum>& sigma) {
    if (!alpha.indivisible)
        throw std::invalid_argument("flip_positive_system: root is divisible");
    {
        const auto simples = simple_roots(phi);
        if (!std::any_of(simples.begin(), simples.end(),
                         [&](const auto& d) { return d.root == alpha.root; }))
            throw std::invalid_argument(
                "flip_positive_system: root is not simple in the given system");
    }
    std::vector<RestrictedRootDatum> out;
    // alpha^-: negative multiples of alpha present in Sigma, in order.
    for (const auto& d : sigma)
        if (positive_ratio(alpha.root, -d.root)) out.push_back(d);
    for (const auto& d : phi)
        if (!positive_ratio(alpha.root, d.root)) out.push_back(d);
    return out;
}

AStarWeight rho_alpha(const RestrictedRootDatum& alpha,
                      const std::vector<RestrictedRootDatum>& sigma) {
    std::vector<RestrictedRootDatum> ray;
    for (const auto& d : sigma)
        if (positive_ratio(alpha.root, d.root)) ray.push_back(d);
    return weyl_vector(ray);
}

}  // namespace helgason
