#pragma once

#include "nilpo/errors.hpp"
#include "nilpo/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nilpo {

/// One nonzero coordinate of a sparse vector.
struct Term {
    std::size_t index;
    Rational value;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse coordinate vector: terms sorted by strictly increasing index, no zero values.
using SparseVector = std::vector<Term>;

namespace vec {

inline SparseVector unit(std::size_t index) { return {Term{index, Rational(1)}}; }

inline Rational coefficient(const SparseVector& v, std::size_t index)
{
    auto it = std::lower_bound(v.begin(), v.end(), index, [](const Term& t, std::size_t i) { return t.index < i; });
    return (it != v.end() && it->index == index) ? it->value : Rational();
}

/// Returns y + a*x.
inline SparseVector axpy(const SparseVector& y, const Rational& a, const SparseVector& x)
{
    if (a.is_zero())
        return y;
    SparseVector out;
    out.reserve(y.size() + x.size());
    auto iy = y.begin();
    auto ix = x.begin();
    while (iy != y.end() || ix != x.end()) {
        if (ix == x.end() || (iy != y.end() && iy->index < ix->index)) {
            out.push_back(*iy++);
        } else if (iy == y.end() || ix->index < iy->index) {
            out.push_back(Term{ix->index, a * ix->value});
            ++ix;
        } else {
            Rational s = iy->value + a * ix->value;
            if (!s.is_zero())
                out.push_back(Term{iy->index, std::move(s)});
            ++iy;
            ++ix;
        }
    }
    return out;
}

inline SparseVector add(const SparseVector& a, const SparseVector& b) { return axpy(a, Rational(1), b); }
inline SparseVector sub(const SparseVector& a, const SparseVector& b) { return axpy(a, Rational(-1), b); }

inline SparseVector scaled(const SparseVector& v, const Rational& a)
{
    if (a.is_zero())
        return {};
    SparseVector out = v;
    for (auto& t : out)
        t.value *= a;
    return out;
}

/// Builds a sparse vector from unsorted (index, value) pairs, summing duplicates.
inline SparseVector from_pairs(std::vector<std::pair<std::size_t, Rational>> pairs)
{
    std::stable_sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseVector out;
    for (auto& [i, v] : pairs) {
        if (!out.empty() && out.back().index == i)
            out.back().value += v;
        else
            out.push_back(Term{i, std::move(v)});
        if (out.back().value.is_zero())
            out.pop_back();
    }
    return out;
}

inline Rational dot(const SparseVector& a, const SparseVector& b)
{
    Rational s;
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->index < ib->index)
            ++ia;
        else if (ib->index < ia->index)
            ++ib;
        else
            s += (ia++)->value * (ib++)->value;
    }
    return s;
}

inline std::vector<Rational> to_dense(const SparseVector& v, std::size_t n)
{
    std::vector<Rational> out(n);
    for (const auto& t : v)
        out.at(t.index) = t.value;
    return out;
}

inline SparseVector from_dense(const std::vector<Rational>& d)
{
    SparseVector out;
    for (std::size_t i = 0; i < d.size(); ++i)
        if (!d[i].is_zero())
            out.push_back(Term{i, d[i]});
    return out;
}

} // namespace vec

/// Sparse matrix over Q stored by rows; absent entries are zero.
class SparseMatrix {
public:
    SparseMatrix() = default;
    SparseMatrix(std::size_t rows, std::size_t cols) : cols_(cols), data_(rows) {}

    static SparseMatrix identity(std::size_t n)
    {
        SparseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            m.data_[i] = vec::unit(i);
        return m;
    }

    static SparseMatrix from_rows(std::size_t cols, std::vector<SparseVector> rows)
    {
        SparseMatrix m;
        m.cols_ = cols;
        for (const auto& r : rows)
            if (!r.empty() && r.back().index >= cols)
                throw DimensionMismatch("row entry beyond column count");
        m.data_ = std::move(rows);
        return m;
    }

    static SparseMatrix from_columns(std::size_t rows, const std::vector<SparseVector>& cols)
    {
        SparseMatrix m(rows, cols.size());
        for (std::size_t c = 0; c < cols.size(); ++c)
            for (const auto& t : cols[c]) {
                if (t.index >= rows)
                    throw DimensionMismatch("column entry beyond row count");
                m.data_[t.index].push_back(Term{c, t.value});
            }
        return m;
    }

    static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& d)
    {
        std::size_t cols = d.empty() ? 0 : d.front().size();
        SparseMatrix m(d.size(), cols);
        for (std::size_t r = 0; r < d.size(); ++r) {
            if (d[r].size() != cols)
                throw DimensionMismatch("ragged dense matrix");
            m.data_[r] = vec::from_dense(d[r]);
        }
        return m;
    }

    std::size_t rows() const { return data_.size(); }
    std::size_t cols() const { return cols_; }
    const SparseVector& row(std::size_t r) const { return data_.at(r); }
    const std::vector<SparseVector>& row_data() const { return data_; }

    std::size_t nonzeros() const
    {
        std::size_t n = 0;
        for (const auto& r : data_)
            n += r.size();
        return n;
    }

    Rational at(std::size_t r, std::size_t c) const
    {
        check(r, c);
        return vec::coefficient(data_[r], c);
    }

    void set(std::size_t r, std::size_t c, const Rational& v)
    {
        check(r, c);
        auto& row = data_[r];
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const Term& t, std::size_t i) { return t.index < i; });
        if (it != row.end() && it->index == c) {
            if (v.is_zero())
                row.erase(it);
            else
                it->value = v;
        } else if (!v.is_zero()) {
            row.insert(it, Term{c, v});
        }
    }

    void add_to(std::size_t r, std::size_t c, const Rational& v) { set(r, c, at(r, c) + v); }

    SparseMatrix transpose() const
    {
        SparseMatrix t(cols_, rows());
        for (std::size_t r = 0; r < rows(); ++r)
            for (const auto& e : data_[r])
                t.data_[e.index].push_back(Term{r, e.value});
        return t;
    }

    /// Matrix-vector product.
    SparseVector apply(const SparseVector& v) const
    {
        SparseVector out;
        for (std::size_t r = 0; r < rows(); ++r) {
            Rational s = vec::dot(data_[r], v);
            if (!s.is_zero())
                out.push_back(Term{r, std::move(s)});
        }
        return out;
    }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b)
    {
        if (a.cols() != b.rows())
            throw DimensionMismatch("matrix product shape mismatch");
        SparseMatrix out(a.rows(), b.cols());
        for (std::size_t r = 0; r < a.rows(); ++r) {
            SparseVector acc;
            for (const auto& t : a.data_[r])
                acc = vec::axpy(acc, t.value, b.data_[t.index]);
            out.data_[r] = std::move(acc);
        }
        return out;
    }

    bool is_zero() const
    {
        return std::all_of(data_.begin(), data_.end(), [](const SparseVector& r) { return r.empty(); });
    }

    friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

private:
    std::size_t cols_ = 0;
    std::vector<SparseVector> data_;

    void check(std::size_t r, std::size_t c) const
    {
        if (r >= rows() || c >= cols_)
            throw DimensionMismatch("matrix index (" + std::to_string(r) + "," + std::to_string(c) + ") out of bounds");
    }
};

/// Row-reduced echelon basis of a subspace of Q^n.
///
/// Invariants: vectors are sorted by pivot, every vector has leading
/// coefficient 1 at its pivot, and every other vector is zero at that pivot.
/// Equal subspaces therefore have identical representations.
class SubspaceBasis {
public:
    SubspaceBasis() = default;
    explicit SubspaceBasis(std::size_t ambient_dim) : ambient_(ambient_dim) {}

    static SubspaceBasis full(std::size_t n)
    {
        SubspaceBasis b(n);
        for (std::size_t i = 0; i < n; ++i) {
            b.vectors_.push_back(vec::unit(i));
            b.pivots_.push_back(i);
        }
        return b;
    }

    /// Span of the given coordinate axes.
    static SubspaceBasis coordinate(std::size_t n, std::vector<std::size_t> axes)
    {
        std::sort(axes.begin(), axes.end());
        axes.erase(std::unique(axes.begin(), axes.end()), axes.end());
        SubspaceBasis b(n);
        for (auto a : axes) {
            if (a >= n)
                throw DimensionMismatch("coordinate axis out of range");
            b.vectors_.push_back(vec::unit(a));
            b.pivots_.push_back(a);
        }
        return b;
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return vectors_.size(); }
    bool empty() const { return vectors_.empty(); }
    const std::vector<SparseVector>& vectors() const { return vectors_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// v minus its projection along the echelon basis; zero iff v lies in the span.
    SparseVector reduce(const SparseVector& v) const
    {
        SparseVector r = v;
        // Echelon vectors vanish at each other's pivots, so the original
        // pivot coordinates of v are exactly the multipliers.
        for (std::size_t k = 0; k < pivots_.size(); ++k) {
            Rational c = vec::coefficient(v, pivots_[k]);
            if (!c.is_zero())
                r = vec::axpy(r, -c, vectors_[k]);
        }
        return r;
    }

    bool contains(const SparseVector& v) const { return reduce(v).empty(); }

    bool contains(const SubspaceBasis& other) const
    {
        if (other.ambient_ != ambient_)
            throw DimensionMismatch("ambient dimension mismatch");
        return std::all_of(other.vectors_.begin(), other.vectors_.end(), [&](const SparseVector& v) { return contains(v); });
    }

    /// Coefficients of v in this basis; v must lie in the span.
    std::vector<Rational> coordinates(const SparseVector& v) const
    {
        if (!contains(v))
            throw NotASubspace("vector not in subspace");
        std::vector<Rational> c;
        c.reserve(pivots_.size());
        for (auto p : pivots_)
            c.push_back(vec::coefficient(v, p));
        return c;
    }

    SparseMatrix as_matrix() const { return SparseMatrix::from_rows(ambient_, vectors_); }

    friend bool operator==(const SubspaceBasis&, const SubspaceBasis&) = default;

private:
    friend class Echelon;
    std::size_t ambient_ = 0;
    std::vector<SparseVector> vectors_;
    std::vector<std::size_t> pivots_;
};

/// Incremental row echelon form of a growing set of vectors.
///
/// Rows are kept with leading coefficient 1 and distinct pivots; only the
/// leading term is eliminated on insertion, which is enough for rank and
/// rank-profile queries. The pivot set is independent of insertion order.
class Echelon {
public:
    explicit Echelon(std::size_t ambient) : ambient_(ambient), pivot_row_(ambient, npos) {}

    /// Adds v; returns true iff v was independent of the vectors seen so far.
    bool insert(SparseVector v)
    {
        if (!v.empty() && v.back().index >= ambient_)
            throw DimensionMismatch("vector index beyond ambient dimension");
        while (!v.empty()) {
            std::size_t p = pivot_row_[v.front().index];
            if (p == npos)
                break;
            Rational lead = v.front().value;
            v = vec::axpy(v, -lead, rows_[p]);
        }
        if (v.empty())
            return false;
        Rational inv = v.front().value.reciprocal();
        if (!inv.is_one())
            for (auto& t : v)
                t.value *= inv;
        pivot_row_[v.front().index] = rows_.size();
        rows_.push_back(std::move(v));
        return true;
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t ambient_dim() const { return ambient_; }

    /// Pivot columns in increasing order.
    std::vector<std::size_t> pivots() const
    {
        std::vector<std::size_t> p;
        p.reserve(rows_.size());
        for (const auto& r : rows_)
            p.push_back(r.front().index);
        std::sort(p.begin(), p.end());
        return p;
    }

    bool is_pivot(std::size_t col) const { return pivot_row_.at(col) != npos; }

    /// Back-substitutes into reduced row echelon form.
    SubspaceBasis finish() &&
    {
        std::sort(rows_.begin(), rows_.end(), [](const SparseVector& a, const SparseVector& b) { return a.front().index < b.front().index; });
        for (std::size_t k = 0; k < rows_.size(); ++k)
            pivot_row_[rows_[k].front().index] = k;
        for (std::size_t k = rows_.size(); k-- > 0;) {
            SparseVector& r = rows_[k];
            // Later rows are already fully reduced and vanish at all other
            // pivots, so a single pass over the original tail suffices.
            SparseVector tail(r.begin() + 1, r.end());
            for (const auto& t : tail) {
                std::size_t p = pivot_row_[t.index];
                if (p != npos)
                    r = vec::axpy(r, -t.value, rows_[p]);
            }
        }
        SubspaceBasis b(ambient_);
        b.pivots_.reserve(rows_.size());
        for (const auto& r : rows_)
            b.pivots_.push_back(r.front().index);
        b.vectors_ = std::move(rows_);
        return b;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::size_t ambient_;
    std::vector<std::size_t> pivot_row_;
    std::vector<SparseVector> rows_;
};

/// Reduced row echelon basis of the span of the given vectors.
inline SubspaceBasis span(std::size_t ambient, const std::vector<SparseVector>& vectors)
{
    Echelon e(ambient);
    for (const auto& v : vectors)
        e.insert(v);
    return std::move(e).finish();
}

/// Reduced row echelon basis of the row space of m.
inline SubspaceBasis rref(const SparseMatrix& m) { return span(m.cols(), m.row_data()); }

inline std::size_t rank(const SparseMatrix& m)
{
    Echelon e(m.cols());
    // Short rows first keeps fill-in down; the rank does not depend on order.
    std::vector<std::size_t> order(m.rows());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return m.row(a).size() < m.row(b).size(); });
    for (auto r : order)
        if (!m.row(r).empty())
            e.insert(m.row(r));
    return e.rank();
}

/// Columns j such that column j is not in the span of columns 0..j-1.
inline std::vector<std::size_t> column_rank_profile(const SparseMatrix& m)
{
    Echelon e(m.cols());
    for (const auto& r : m.row_data())
        if (!r.empty())
            e.insert(r);
    return e.pivots();
}

/// Basis of {x : m x = 0}.
inline SubspaceBasis kernel_basis(const SparseMatrix& m)
{
    SubspaceBasis r = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : r.pivots())
        is_pivot[p] = true;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> cols(n);
    for (std::size_t k = 0; k < r.dim(); ++k) {
        const auto& row = r.vectors()[k];
        for (std::size_t t = 1; t < row.size(); ++t)
            cols[row[t].index].emplace_back(r.pivots()[k], -row[t].value);
    }
    std::vector<SparseVector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        auto pairs = std::move(cols[f]);
        pairs.emplace_back(f, Rational(1));
        basis.push_back(vec::from_pairs(std::move(pairs)));
    }
    return span(n, basis);
}

inline SubspaceBasis subspace_sum(const SubspaceBasis& u, const SubspaceBasis& v)
{
    if (u.ambient_dim() != v.ambient_dim())
        throw DimensionMismatch("subspace_sum: ambient dimensions differ");
    Echelon e(u.ambient_dim());
    for (const auto& x : u.vectors())
        e.insert(x);
    for (const auto& x : v.vectors())
        e.insert(x);
    return std::move(e).finish();
}

/// Intersection by the Zassenhaus construction on [u|u] and [v|0].
inline SubspaceBasis subspace_intersect(const SubspaceBasis& u, const SubspaceBasis& v)
{
    if (u.ambient_dim() != v.ambient_dim())
        throw DimensionMismatch("subspace_intersect: ambient dimensions differ");
    const std::size_t n = u.ambient_dim();
    Echelon e(2 * n);
    for (const auto& x : u.vectors()) {
        SparseVector row = x;
        for (const auto& t : x)
            row.push_back(Term{t.index + n, t.value});
        e.insert(std::move(row));
    }
    for (const auto& x : v.vectors())
        e.insert(x);
    SubspaceBasis joint = std::move(e).finish();
    std::vector<SparseVector> out;
    for (std::size_t k = 0; k < joint.dim(); ++k) {
        if (joint.pivots()[k] < n)
            continue;
        SparseVector w;
        for (const auto& t : joint.vectors()[k])
            w.push_back(Term{t.index - n, t.value});
        out.push_back(std::move(w));
    }
    return span(n, out);
}

/// dim u - dim w, after checking w is a subspace of u.
inline std::size_t quotient_dim(const SubspaceBasis& u, const SubspaceBasis& w)
{
    if (u.ambient_dim() != w.ambient_dim())
        throw DimensionMismatch("quotient_dim: ambient dimensions differ");
    if (!u.contains(w))
        throw NotASubspace("quotient_dim: denominator is not contained in numerator");
    return u.dim() - w.dim();
}

/// Image of the subspace u under the linear map m.
inline SubspaceBasis image(const SparseMatrix& m, const SubspaceBasis& u)
{
    if (m.cols() != u.ambient_dim())
        throw DimensionMismatch("image: map domain does not match subspace");
    std::vector<SparseVector> imgs;
    imgs.reserve(u.dim());
    for (const auto& v : u.vectors())
        imgs.push_back(m.apply(v));
    return span(m.rows(), imgs);
}

/// {x in u : m x lies in target}.
inline SubspaceBasis restricted_preimage(const SparseMatrix& m, const SubspaceBasis& u, const SubspaceBasis& target)
{
    if (m.cols() != u.ambient_dim() || m.rows() != target.ambient_dim())
        throw DimensionMismatch("preimage: shape mismatch");
    // Coordinates of m*u_t outside the target's pivot set must cancel.
    std::vector<SparseVector> cols;
    cols.reserve(u.dim());
    for (const auto& v : u.vectors())
        cols.push_back(target.reduce(m.apply(v)));
    SubspaceBasis coeffs = kernel_basis(SparseMatrix::from_columns(m.rows(), cols));
    std::vector<SparseVector> out;
    out.reserve(coeffs.dim());
    for (const auto& c : coeffs.vectors()) {
        SparseVector x;
        for (const auto& t : c)
            x = vec::axpy(x, t.value, u.vectors()[t.index]);
        out.push_back(std::move(x));
    }
    return span(u.ambient_dim(), out);
}

/// {x in u : m x = 0}.
inline SubspaceBasis restricted_kernel(const SparseMatrix& m, const SubspaceBasis& u)
{
    return restricted_preimage(m, u, SubspaceBasis(m.rows()));
}

/// Determinant by exact Gaussian elimination.
inline Rational determinant(const SparseMatrix& m)
{
    if (m.rows() != m.cols())
        throw DimensionMismatch("determinant of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<SparseVector> rows = m.row_data();
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        // Pivot: the row with leading column c and the shortest support.
        std::size_t best = n;
        for (std::size_t r = c; r < n; ++r)
            if (!rows[r].empty() && rows[r].front().index == c && (best == n || rows[r].size() < rows[best].size()))
                best = r;
        if (best == n)
            return Rational();
        if (best != c) {
            std::swap(rows[best], rows[c]);
            det = -det;
        }
        const Rational lead = rows[c].front().value;
        det *= lead;
        Rational inv = lead.reciprocal();
        for (std::size_t r = c + 1; r < n; ++r)
            if (!rows[r].empty() && rows[r].front().index == c)
                rows[r] = vec::axpy(rows[r], -(rows[r].front().value * inv), rows[c]);
    }
    return det;
}

/// Some x with m x = b, or nullopt if inconsistent.
inline std::optional<SparseVector> solve(const SparseMatrix& m, const SparseVector& b)
{
    const std::size_t n = m.cols();
    std::vector<SparseVector> aug = m.row_data();
    for (const auto& t : b)
        aug.at(t.index).push_back(Term{n, t.value});
    SubspaceBasis r = span(n + 1, aug);
    SparseVector x;
    for (std::size_t k = 0; k < r.dim(); ++k) {
        if (r.pivots()[k] == n)
            return std::nullopt;
        Rational rhs = vec::coefficient(r.vectors()[k], n);
        if (!rhs.is_zero())
            x.push_back(Term{r.pivots()[k], rhs});
    }
    return x;
}

/// Inverse of a square matrix, or nullopt if singular.
inline std::optional<SparseMatrix> inverse(const SparseMatrix& m)
{
    if (m.rows() != m.cols())
        throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return m;
    std::vector<SparseVector> aug;
    aug.reserve(n);
    for (std::size_t r = 0; r < n; ++r) {
        SparseVector row = m.row(r);
        row.push_back(Term{n + r, Rational(1)});
        aug.push_back(std::move(row));
    }
    SubspaceBasis red = span(2 * n, aug);
    if (red.dim() != n || red.pivots().back() >= n)
        return std::nullopt;
    std::vector<SparseVector> rows;
    rows.reserve(n);
    for (const auto& v : red.vectors()) {
        SparseVector row;
        for (const auto& t : v)
            if (t.index >= n)
                row.push_back(Term{t.index - n, t.value});
        rows.push_back(std::move(row));
    }
    return SparseMatrix::from_rows(n, std::move(rows));
}

} // namespace nilpo
