#pragma once

#include "nilpo/exactlin.hpp"
#include "nilpo/kform.hpp"
#include "nilpo/liealg.hpp"

#include <bit>
#include <utility>
#include <vector>

namespace nilpo {

/// Chevalley–Eilenberg differential of an algebra, in the convention
/// dγ(x, y) = -γ([x, y]) for 1-forms, extended as an odd derivation.
class Coboundary {
public:
    explicit Coboundary(const LieAlgebra& a) : dim_(a.dim()), terms_(a.dim())
    {
        if (a.dim() > kMaxDim)
            throw InvalidArgument("dimension exceeds " + std::to_string(kMaxDim));
        for (const auto& [key, value] : a.brackets())
            for (const auto& t : value)
                terms_[t.index].push_back(Piece{key.first, key.second, -t.value});
    }

    std::size_t dim() const { return dim_; }

    /// Calls emit(monomial, coefficient) for each term of d(e^M); a target may repeat.
    template <class Emit>
    void apply(Monomial m, Emit&& emit) const
    {
        std::size_t position = 0;
        for (Monomial rest = m; rest; rest &= rest - 1, ++position) {
            auto k = static_cast<std::size_t>(std::countr_zero(rest));
            const Monomial others = m & ~mono::bit(k);
            for (const auto& piece : terms_[k]) {
                const Monomial pair = mono::bit(piece.a) | mono::bit(piece.b);
                if (pair & others)
                    continue;
                int parity = static_cast<int>(position) + std::popcount(others & mono::below(piece.a)) +
                             std::popcount(others & mono::below(piece.b));
                emit(others | pair, (parity & 1) ? -piece.coef : piece.coef);
            }
        }
    }

    KForm operator()(const KForm& f) const
    {
        if (f.dim() != dim_)
            throw DimensionMismatch("form and algebra dimensions differ");
        KForm out(dim_, f.degree() + 1);
        if (out.degree() > dim_)
            return out;
        for (const auto& [m, c] : f.terms())
            apply(m, [&](Monomial t, const Rational& v) { out.add(t, c * v); });
        return out;
    }

private:
    // de^k contains coef · e^a∧e^b with a < b.
    struct Piece {
        std::size_t a, b;
        Rational coef;
    };
    std::size_t dim_;
    std::vector<std::vector<Piece>> terms_;
};

inline KForm d(const LieAlgebra& a, const KForm& f) { return Coboundary(a)(f); }

/// Matrix of d_p : Λ^p → Λ^{p+1} in the lexicographic monomial bases,
/// shape C(m, p+1) × C(m, p); column j is d of the j-th monomial.
inline SparseMatrix differential_matrix(const LieAlgebra& a, std::size_t p)
{
    const std::size_t m = a.dim();
    MonomialIndex src(m, p), dst(m, p + 1);
    SparseMatrix out(dst.size(), src.size());
    if (p >= m)
        return out;
    Coboundary cob(a);
    std::vector<SparseVector> rows(dst.size());
    const auto monos = src.all();
    for (std::size_t col = 0; col < monos.size(); ++col) {
        std::vector<std::pair<std::size_t, Rational>> pairs;
        cob.apply(monos[col], [&](Monomial t, const Rational& v) { pairs.emplace_back(dst.rank(t), v); });
        for (auto& t : vec::from_pairs(std::move(pairs)))
            rows[t.index].push_back(Term{col, std::move(t.value)});
    }
    return SparseMatrix::from_rows(src.size(), std::move(rows));
}

/// Pullback B^*f, where B acts on the algebra by B e_i = Σ_a B(a, i) e_a.
inline KForm pullback(const KForm& f, const SparseMatrix& b)
{
    const std::size_t m = f.dim();
    if (b.rows() != m || b.cols() != m)
        throw DimensionMismatch("pullback matrix shape");
    std::vector<KForm> pulled;
    pulled.reserve(m);
    for (std::size_t a = 0; a < m; ++a) {
        KForm g(m, 1);
        for (const auto& t : b.row(a))
            g.add(mono::bit(t.index), t.value);
        pulled.push_back(std::move(g));
    }
    KForm out(m, f.degree());
    for (const auto& [mask, c] : f.terms()) {
        KForm acc = KForm::constant(m, c);
        for (auto i : mono::indices(mask))
            acc = wedge(acc, pulled[i]);
        out += acc;
    }
    return out;
}

} // namespace nilpo
