#pragma once

#include "nilpo/errors.hpp"
#include "nilpo/exactlin.hpp"
#include "nilpo/kform.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace nilpo {

/// Finite-dimensional Lie algebra over Q given by structure constants.
///
/// Basis indices are 0-based. Only brackets [e_i, e_j] with i < j are
/// stored; [e_j, e_i] is read as the negative.
class LieAlgebra {
public:
    using BracketTable = std::map<std::pair<std::size_t, std::size_t>, SparseVector>;

    LieAlgebra() = default;

    /// Abelian algebra with labels e1..em.
    explicit LieAlgebra(std::size_t dim)
    {
        for (std::size_t i = 0; i < dim; ++i)
            labels_.push_back("e" + std::to_string(i + 1));
    }

    explicit LieAlgebra(std::vector<std::string> labels) : labels_(std::move(labels)) {}

    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    const BracketTable& brackets() const { return brackets_; }
    bool is_abelian() const { return brackets_.empty(); }

    /// Sets [e_i, e_j] = value; i > j stores the negated value under (j, i).
    void set_bracket(std::size_t i, std::size_t j, SparseVector value)
    {
        if (i >= dim() || j >= dim())
            throw InvalidArgument("bracket index out of range: (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        if (!value.empty() && value.back().index >= dim())
            throw InvalidArgument("bracket value index out of range");
        if (i == j) {
            if (!value.empty())
                throw InvalidArgument("[e_i, e_i] must vanish");
            return;
        }
        if (i > j) {
            std::swap(i, j);
            value = vec::scaled(value, Rational(-1));
        }
        if (value.empty())
            brackets_.erase({i, j});
        else
            brackets_[{i, j}] = std::move(value);
    }

    SparseVector bracket(std::size_t i, std::size_t j) const
    {
        if (i == j)
            return {};
        bool flip = i > j;
        auto it = brackets_.find(flip ? std::pair{j, i} : std::pair{i, j});
        if (it == brackets_.end())
            return {};
        return flip ? vec::scaled(it->second, Rational(-1)) : it->second;
    }

    SparseVector bracket(const SparseVector& x, const SparseVector& y) const
    {
        SparseVector out;
        for (const auto& [key, value] : brackets_) {
            auto [i, j] = key;
            Rational c = vec::coefficient(x, i) * vec::coefficient(y, j) - vec::coefficient(x, j) * vec::coefficient(y, i);
            if (!c.is_zero())
                out = vec::axpy(out, c, value);
        }
        return out;
    }

    friend bool operator==(const LieAlgebra&, const LieAlgebra&) = default;

private:
    std::vector<std::string> labels_;
    BracketTable brackets_;
};

/// One failure found by validate().
struct Violation {
    enum class Kind { Jacobi, Label };
    Kind kind;
    std::size_t i = 0, j = 0, k = 0;
    SparseVector defect;
    std::string message;
};

/// Exhaustive Jacobi check over all triples i < j < k, plus label hygiene.
inline std::vector<Violation> validate(const LieAlgebra& a)
{
    std::vector<Violation> out;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = i + 1; j < a.dim(); ++j)
            if (a.label(i) == a.label(j))
                out.push_back({Violation::Kind::Label, i, j, 0, {}, "duplicate basis label '" + a.label(i) + "'"});
    const std::size_t m = a.dim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            SparseVector ij = a.bracket(i, j);
            for (std::size_t k = j + 1; k < m; ++k) {
                SparseVector jac = a.bracket(ij, vec::unit(k));
                jac = vec::add(jac, a.bracket(a.bracket(j, k), vec::unit(i)));
                jac = vec::add(jac, a.bracket(a.bracket(k, i), vec::unit(j)));
                if (!jac.empty()) {
                    std::string msg = "Jacobi identity fails on (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                      std::to_string(k + 1) + ")";
                    out.push_back({Violation::Kind::Jacobi, i, j, k, std::move(jac), std::move(msg)});
                }
            }
        }
    return out;
}

/// Lower central series n^0 ⊇ n^1 ⊇ ... ⊇ n^k = 0 and the center.
struct SeriesReport {
    std::vector<SubspaceBasis> ideals;
    std::size_t nilpotency_index = 0;
    SubspaceBasis center;

    std::vector<std::size_t> dims() const
    {
        std::vector<std::size_t> d;
        for (const auto& s : ideals)
            d.push_back(s.dim());
        return d;
    }
};

/// {x : [x, n] = 0}.
inline SubspaceBasis center(const LieAlgebra& a)
{
    const std::size_t m = a.dim();
    // Row (b, k): coefficient of e_k in [x, e_b] as a linear function of x.
    SparseMatrix eq(m * m, m);
    for (const auto& [key, value] : a.brackets()) {
        auto [i, j] = key;
        for (const auto& t : value) {
            eq.add_to(j * m + t.index, i, t.value);
            eq.add_to(i * m + t.index, j, -t.value);
        }
    }
    return kernel_basis(eq);
}

/// [n, s] for a subspace s.
inline SubspaceBasis bracket_with_algebra(const LieAlgebra& a, const SubspaceBasis& s)
{
    std::vector<SparseVector> gens;
    for (std::size_t b = 0; b < a.dim(); ++b)
        for (const auto& v : s.vectors()) {
            SparseVector w = a.bracket(vec::unit(b), v);
            if (!w.empty())
                gens.push_back(std::move(w));
        }
    return span(a.dim(), gens);
}

/// Throws NotNilpotent if the series stabilizes at a nonzero ideal.
inline SeriesReport lower_central_series(const LieAlgebra& a)
{
    SeriesReport r;
    r.ideals.push_back(SubspaceBasis::full(a.dim()));
    while (!r.ideals.back().empty()) {
        SubspaceBasis next = bracket_with_algebra(a, r.ideals.back());
        if (next.dim() == r.ideals.back().dim())
            throw NotNilpotent("lower central series stabilizes at dimension " + std::to_string(next.dim()));
        r.ideals.push_back(std::move(next));
    }
    r.nilpotency_index = r.ideals.size() - 1;
    r.center = center(a);
    return r;
}

/// Block-diagonal sum a ⊕ b; b's basis follows a's.
inline LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b)
{
    std::vector<std::string> labels = a.labels();
    labels.insert(labels.end(), b.labels().begin(), b.labels().end());
    LieAlgebra out(std::move(labels));
    for (const auto& [key, value] : a.brackets())
        out.set_bracket(key.first, key.second, value);
    const std::size_t off = a.dim();
    for (const auto& [key, value] : b.brackets()) {
        SparseVector shifted = value;
        for (auto& t : shifted)
            t.index += off;
        out.set_bracket(key.first + off, key.second + off, std::move(shifted));
    }
    return out;
}

/// a ⊕ R^s, the new abelian summands labelled u1..us (numbering continues past existing u-labels).
inline LieAlgebra trivial_extension(const LieAlgebra& a, std::size_t s)
{
    std::size_t next = 1;
    while (std::find(a.labels().begin(), a.labels().end(), "u" + std::to_string(next)) != a.labels().end())
        ++next;
    std::vector<std::string> labels;
    for (std::size_t t = 0; t < s; ++t)
        labels.push_back("u" + std::to_string(next + t));
    return direct_sum(a, LieAlgebra(std::move(labels)));
}

/// Value of a 2-form on a pair of vectors.
inline Rational evaluate_two_form(const KForm& w, const SparseVector& x, const SparseVector& y)
{
    Rational s;
    for (const auto& [m, c] : w.terms()) {
        auto idx = mono::indices(m);
        s += c * (vec::coefficient(x, idx[0]) * vec::coefficient(y, idx[1]) - vec::coefficient(x, idx[1]) * vec::coefficient(y, idx[0]));
    }
    return s;
}

/// True iff the 2-form w satisfies dw = 0 on a.
inline bool is_closed_two_form(const LieAlgebra& a, const KForm& w)
{
    const std::size_t m = a.dim();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            for (std::size_t k = j + 1; k < m; ++k) {
                Rational s = evaluate_two_form(w, a.bracket(i, j), vec::unit(k)) - evaluate_two_form(w, a.bracket(i, k), vec::unit(j)) +
                             evaluate_two_form(w, a.bracket(j, k), vec::unit(i));
                if (!s.is_zero())
                    return false;
            }
    return true;
}

/// n ⊕ Rz with [[x,y]] = [x,y] + w(x,y) z and z central; z is the last basis vector.
inline LieAlgebra central_extension(const LieAlgebra& a, const KForm& w)
{
    if (w.degree() != 2 || w.dim() != a.dim())
        throw InvalidArgument("central extension needs a 2-form on the algebra");
    if (!is_closed_two_form(a, w))
        throw FormNotClosed("central extension by a non-closed 2-form");
    std::vector<std::string> labels = a.labels();
    std::string z = "z";
    for (std::size_t n = 2; std::find(labels.begin(), labels.end(), z) != labels.end(); ++n)
        z = "z" + std::to_string(n);
    labels.push_back(z);
    LieAlgebra out(std::move(labels));
    const std::size_t zi = a.dim();
    for (const auto& [key, value] : a.brackets())
        out.set_bracket(key.first, key.second, value);
    for (const auto& [m, c] : w.terms()) {
        auto idx = mono::indices(m);
        SparseVector v = out.bracket(idx[0], idx[1]);
        v.push_back(Term{zi, c});
        out.set_bracket(idx[0], idx[1], std::move(v));
    }
    return out;
}

} // namespace nilpo
