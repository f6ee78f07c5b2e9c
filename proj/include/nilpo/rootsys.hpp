#pragma once

#include "nilpo/errors.hpp"
#include "nilpo/exactlin.hpp"
#include "nilpo/liealg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace nilpo {

enum class Family { A, B, C, D };

inline char family_letter(Family f) { return "ABCD"[static_cast<int>(f)]; }

inline Family parse_family(const std::string& s)
{
    if (s == "A" || s == "a")
        return Family::A;
    if (s == "B" || s == "b")
        return Family::B;
    if (s == "C" || s == "c")
        return Family::C;
    if (s == "D" || s == "d")
        return Family::D;
    throw InvalidArgument("unknown root system family '" + s + "'");
}

inline std::size_t min_rank(Family f)
{
    switch (f) {
    case Family::A: return 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 4;
    }
    return 1;
}

using RootVector = std::vector<int>;

inline int level(const RootVector& r) { return std::accumulate(r.begin(), r.end(), 0); }

/// Positive roots in simple-root coordinates, sorted by level, then by
/// decreasing coefficient vector (so the simple roots appear as α_1, ..., α_n).
struct RootSystem {
    Family family = Family::A;
    std::size_t rank = 0;
    std::vector<RootVector> positive_roots;

    std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }

    /// Matrix size of the defining representation.
    std::size_t matrix_size() const
    {
        switch (family) {
        case Family::A: return rank + 1;
        case Family::B: return 2 * rank + 1;
        case Family::C:
        case Family::D: return 2 * rank;
        }
        return 0;
    }
};

namespace detail {

using QMatrix = std::vector<std::vector<Rational>>;

inline QMatrix zero_matrix(std::size_t n) { return QMatrix(n, std::vector<Rational>(n)); }

inline QMatrix mat_mul(const QMatrix& a, const QMatrix& b)
{
    const std::size_t n = a.size();
    QMatrix c = zero_matrix(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            if (!a[i][k].is_zero())
                for (std::size_t j = 0; j < n; ++j)
                    if (!b[k][j].is_zero())
                        c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline QMatrix commutator(const QMatrix& a, const QMatrix& b)
{
    QMatrix x = mat_mul(a, b), y = mat_mul(b, a);
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
            x[i][j] -= y[i][j];
    return x;
}

inline bool is_zero(const QMatrix& a)
{
    return std::all_of(a.begin(), a.end(), [](const auto& row) { return std::all_of(row.begin(), row.end(), [](const Rational& v) { return v.is_zero(); }); });
}

// The invariant form: antidiagonal, symmetric for B and D, +1 above and -1 below the middle for C.
inline QMatrix invariant_form(const RootSystem& rs)
{
    const std::size_t n = rs.matrix_size();
    QMatrix j = zero_matrix(n);
    for (std::size_t i = 0; i < n; ++i)
        j[i][n - 1 - i] = Rational(rs.family == Family::C && i >= n / 2 ? -1 : 1);
    return j;
}

// ε-weight of the i-th diagonal entry of a Cartan element.
inline std::vector<int> diagonal_weight(const RootSystem& rs, std::size_t i)
{
    const std::size_t n = rs.rank;
    if (rs.family == Family::A) {
        std::vector<int> w(n + 1, 0);
        w[i] = 1;
        return w;
    }
    std::vector<int> w(n, 0);
    const std::size_t size = rs.matrix_size();
    if (i < n)
        w[i] = 1;
    else if (i >= size - n)
        w[size - 1 - i] = -1;
    return w;
}

// Simple roots α_1..α_n in ε-coordinates, as columns.
inline SparseMatrix simple_root_columns(const RootSystem& rs)
{
    const std::size_t n = rs.rank;
    const std::size_t coords = rs.family == Family::A ? n + 1 : n;
    std::vector<SparseVector> cols;
    for (std::size_t i = 0; i + 1 < n; ++i)
        cols.push_back(vec::from_pairs({{i, Rational(1)}, {i + 1, Rational(-1)}}));
    switch (rs.family) {
    case Family::A: cols.push_back(vec::from_pairs({{n - 1, Rational(1)}, {n, Rational(-1)}})); break;
    case Family::B: cols.push_back(vec::unit(n - 1)); break;
    case Family::C: cols.push_back(vec::from_pairs({{n - 1, Rational(2)}})); break;
    case Family::D: cols.push_back(vec::from_pairs({{n - 2, Rational(1)}, {n - 1, Rational(1)}})); break;
    }
    return SparseMatrix::from_columns(coords, cols);
}

struct RootVectorMatrix {
    RootVector root;
    QMatrix matrix;
};

// One nonzero matrix per positive root, in the sorted root order.
inline std::vector<RootVectorMatrix> root_matrices(const RootSystem& rs)
{
    const std::size_t size = rs.matrix_size();
    SparseMatrix simple = simple_root_columns(rs);
    QMatrix form = invariant_form(rs);
    QMatrix form_inv = zero_matrix(size);
    {
        SparseMatrix f(size, size);
        for (std::size_t i = 0; i < size; ++i)
            f.set(i, size - 1 - i, form[i][size - 1 - i]);
        SparseMatrix inv = *inverse(f);
        for (std::size_t i = 0; i < size; ++i)
            for (const auto& t : inv.row(i))
                form_inv[i][t.index] = t.value;
    }
    std::map<RootVector, QMatrix> found;
    for (std::size_t a = 0; a < size; ++a)
        for (std::size_t b = a + 1; b < size; ++b) {
            QMatrix x = zero_matrix(size);
            x[a][b] = Rational(1);
            if (rs.family != Family::A) {
                // X = E_ab - J^{-1} E_ab^T J keeps X in the Lie algebra of the form.
                QMatrix eba = zero_matrix(size);
                eba[b][a] = Rational(1);
                QMatrix partner = mat_mul(mat_mul(form_inv, eba), form);
                for (std::size_t i = 0; i < size; ++i)
                    for (std::size_t j = 0; j < size; ++j)
                        x[i][j] -= partner[i][j];
            }
            if (is_zero(x))
                continue;
            std::vector<int> wa = diagonal_weight(rs, a), wb = diagonal_weight(rs, b);
            SparseVector eps;
            for (std::size_t t = 0; t < wa.size(); ++t)
                if (wa[t] != wb[t])
                    eps.push_back(Term{t, Rational(wa[t] - wb[t])});
            auto coeffs = solve(simple, eps);
            if (!coeffs)
                throw InternalExpansionFailure("weight is not in the root lattice");
            RootVector r(rs.rank, 0);
            for (const auto& t : *coeffs) {
                if (!t.value.is_integer() || t.value.sign() < 0)
                    throw InternalExpansionFailure("upper-triangular weight is not a positive root");
                r[t.index] = static_cast<int>(t.value.to_mpq().get_num().get_si());
            }
            found.try_emplace(r, std::move(x));
        }
    std::vector<RootVectorMatrix> out;
    for (auto& [r, x] : found)
        out.push_back({r, std::move(x)});
    std::sort(out.begin(), out.end(), [](const RootVectorMatrix& x, const RootVectorMatrix& y) {
        int lx = level(x.root), ly = level(y.root);
        return lx != ly ? lx < ly : x.root > y.root;
    });
    return out;
}

} // namespace detail

/// Positive roots of the given classical type, obtained from the weights of
/// the upper-triangular root vectors of its matrix realization.
inline RootSystem positive_roots(Family family, std::size_t n)
{
    if (n < min_rank(family))
        throw InvalidArgument(std::string("rank ") + std::to_string(n) + " is below the minimum for family " + family_letter(family));
    RootSystem rs;
    rs.family = family;
    rs.rank = n;
    for (auto& rv : detail::root_matrices(rs))
        rs.positive_roots.push_back(std::move(rv.root));
    return rs;
}

struct LevelData {
    RootVector max_root;
    std::size_t k = 0;
    /// layer_dims[i] = dim L_{i+1}.
    std::vector<std::size_t> layer_dims;
};

inline LevelData level_data(const RootSystem& rs)
{
    LevelData d;
    for (const auto& r : rs.positive_roots) {
        auto l = static_cast<std::size_t>(level(r));
        if (l > d.k) {
            d.k = l;
            d.max_root = r;
        }
        if (d.layer_dims.size() < l)
            d.layer_dims.resize(l, 0);
        ++d.layer_dims[l - 1];
    }
    return d;
}

/// Nilradical with its grading by root level; basis vector i spans the root space of roots[i].
struct GradedNilradical {
    RootSystem roots;
    LieAlgebra algebra;
    std::vector<std::size_t> level_of_basis;
    std::vector<std::size_t> layers;

    std::size_t nilpotency_index() const { return layers.size(); }
};

inline std::string root_label(const RootVector& r)
{
    std::string s = "g";
    for (std::size_t i = 0; i < r.size(); ++i)
        s += (i ? "." : "") + std::to_string(r[i]);
    return s;
}

/// Positive-root nilradical with structure constants read off matrix commutators.
inline GradedNilradical nilradical(Family family, std::size_t n)
{
    GradedNilradical g;
    g.roots.family = family;
    g.roots.rank = n;
    if (n < min_rank(family))
        throw InvalidArgument(std::string("rank ") + std::to_string(n) + " is below the minimum for family " + family_letter(family));
    auto mats = detail::root_matrices(g.roots);
    std::map<RootVector, std::size_t> index;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < mats.size(); ++i) {
        g.roots.positive_roots.push_back(mats[i].root);
        index[mats[i].root] = i;
        labels.push_back(root_label(mats[i].root));
        g.level_of_basis.push_back(static_cast<std::size_t>(level(mats[i].root)));
    }
    g.layers = level_data(g.roots).layer_dims;
    g.algebra = LieAlgebra(std::move(labels));
    const std::size_t size = g.roots.matrix_size();
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j) {
            auto c = detail::commutator(mats[i].matrix, mats[j].matrix);
            if (detail::is_zero(c))
                continue;
            RootVector sum = mats[i].root;
            for (std::size_t t = 0; t < sum.size(); ++t)
                sum[t] += mats[j].root[t];
            auto it = index.find(sum);
            if (it == index.end())
                throw InternalExpansionFailure("commutator of " + root_label(mats[i].root) + " and " + root_label(mats[j].root) + " is not a root vector");
            // Root spaces are one-dimensional: c must be a multiple of X_{α+β}.
            const auto& x = mats[it->second].matrix;
            Rational coef;
            bool have = false;
            for (std::size_t a = 0; a < size && !have; ++a)
                for (std::size_t b = 0; b < size && !have; ++b)
                    if (!x[a][b].is_zero()) {
                        coef = c[a][b] / x[a][b];
                        have = true;
                    }
            for (std::size_t a = 0; a < size; ++a)
                for (std::size_t b = 0; b < size; ++b)
                    if (c[a][b] != coef * x[a][b])
                        throw InternalExpansionFailure("commutator of " + root_label(mats[i].root) + " and " + root_label(mats[j].root) +
                                                       " is not proportional to the root vector");
            g.algebra.set_bracket(i, j, {Term{it->second, coef}});
        }
    return g;
}

} // namespace nilpo
