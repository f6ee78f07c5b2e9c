#pragma once

#include "nilpo/errors.hpp"
#include "nilpo/exactlin.hpp"
#include "nilpo/exterior.hpp"
#include "nilpo/kform.hpp"
#include "nilpo/liealg.hpp"
#include "nilpo/parallel.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

namespace nilpo {

// ---------------------------------------------------------------------------
// Filtration V_0 ⊆ V_1 ⊆ ... ⊆ V_k of the dual space

/// V_i ⊆ n* as echelon bases in the dual coordinates; V_0 = 0 and V_k = n*.
struct FiltrationBasis {
    std::vector<SubspaceBasis> spaces;

    std::size_t nilpotency_index() const { return spaces.empty() ? 0 : spaces.size() - 1; }
    const SubspaceBasis& operator[](std::size_t i) const { return spaces.at(i); }
};

/// {α : α(s) = 0 for all s in u}, in dual coordinates.
inline SubspaceBasis annihilator(const SubspaceBasis& u) { return kernel_basis(u.as_matrix()); }

/// Λ^q of a subspace of n*, as a subspace of Λ^q n* in lexicographic monomial coordinates.
/// Λ^0 of the zero space is zero, Λ^0 of anything else is the scalars.
inline SubspaceBasis exterior_power(const SubspaceBasis& v, std::size_t q)
{
    const std::size_t m = v.ambient_dim();
    MonomialIndex idx(m, q);
    if (q == 0)
        return v.empty() ? SubspaceBasis(1) : SubspaceBasis::full(1);
    if (q > v.dim())
        return SubspaceBasis(idx.size());
    bool coordinate = std::all_of(v.vectors().begin(), v.vectors().end(), [](const SparseVector& x) { return x.size() == 1; });
    std::vector<SparseVector> gens;
    if (coordinate) {
        for (Monomial sub : MonomialIndex(v.dim(), q).all()) {
            Monomial mask = 0;
            for (auto s : mono::indices(sub))
                mask |= mono::bit(v.pivots()[s]);
            gens.push_back(vec::unit(idx.rank(mask)));
        }
        return span(idx.size(), gens);
    }
    std::vector<KForm> ones;
    for (const auto& x : v.vectors()) {
        KForm f(m, 1);
        for (const auto& t : x)
            f.add(mono::bit(t.index), t.value);
        ones.push_back(std::move(f));
    }
    for (Monomial sub : MonomialIndex(v.dim(), q).all()) {
        KForm acc = KForm::constant(m, Rational(1));
        for (auto s : mono::indices(sub))
            acc = wedge(acc, ones[s]);
        gens.push_back(acc.coordinates());
    }
    return span(idx.size(), gens);
}

/// Annihilators of the lower central series: V_i = (n^i)°.
inline FiltrationBasis filtration_from_series(const SeriesReport& s)
{
    FiltrationBasis f;
    for (const auto& ideal : s.ideals)
        f.spaces.push_back(annihilator(ideal));
    return f;
}

/// The recursive construction V_0 = 0, V_i = {α : dα ∈ Λ²V_{i-1}}.
inline FiltrationBasis filtration_recursive(const LieAlgebra& a)
{
    const std::size_t m = a.dim();
    SparseMatrix d1 = differential_matrix(a, 1);
    FiltrationBasis f;
    f.spaces.push_back(SubspaceBasis(m));
    while (f.spaces.back().dim() < m) {
        SubspaceBasis target = exterior_power(f.spaces.back(), 2);
        SubspaceBasis next = restricted_preimage(d1, SubspaceBasis::full(m), target);
        if (next.dim() == f.spaces.back().dim())
            throw NotNilpotent("filtration stabilizes below the full dual space");
        f.spaces.push_back(std::move(next));
    }
    return f;
}

/// Canonical filtration, computed from the series and re-derived recursively; both must agree.
inline FiltrationBasis filtration(const LieAlgebra& a)
{
    FiltrationBasis f = filtration_from_series(lower_central_series(a));
    FiltrationBasis g = filtration_recursive(a);
    if (f.spaces != g.spaces)
        throw InternalError("annihilator and recursive filtrations disagree");
    return f;
}

// ---------------------------------------------------------------------------
// Limit terms, literal quotient construction

namespace detail {

struct QuotientSpaces {
    SubspaceBasis numerator;
    SubspaceBasis denominator;
};

// Numerator and denominator of E_∞^{p,q} as subspaces of Λ^{p+q} n*.
inline QuotientSpaces e_infty_spaces(const LieAlgebra& a, const FiltrationBasis& f, std::size_t p, std::size_t i)
{
    const std::size_t m = a.dim();
    const std::size_t k = f.nilpotency_index();
    const std::size_t j = k - p;
    SparseMatrix d_out = differential_matrix(a, i);
    SubspaceBasis top = exterior_power(f[j], i);
    SubspaceBasis below = exterior_power(f[j - 1], i);
    SubspaceBasis numerator = restricted_kernel(d_out, top);
    SubspaceBasis exact(top.ambient_dim());
    if (i > 0) {
        SparseMatrix d_in = differential_matrix(a, i - 1);
        SubspaceBasis pre = restricted_preimage(d_in, SubspaceBasis::full(static_cast<std::size_t>(binomial(m, i - 1))), top);
        exact = image(d_in, pre);
    }
    SubspaceBasis denominator = subspace_sum(exact, restricted_kernel(d_out, below));
    return {std::move(numerator), std::move(denominator)};
}

} // namespace detail

/// dim E_∞^{p,q}: closed forms in Λ^{p+q}V_{k-p} modulo the exact ones there
/// plus the closed forms one filtration step lower. Zero outside the table.
inline std::size_t e_infty_dim(const LieAlgebra& a, long p, long q)
{
    const long i = p + q;
    if (p < 0 || i < 0 || i > static_cast<long>(a.dim()))
        return 0;
    FiltrationBasis f = filtration_from_series(lower_central_series(a));
    if (p >= static_cast<long>(f.nilpotency_index()))
        return 0;
    auto spaces = detail::e_infty_spaces(a, f, static_cast<std::size_t>(p), static_cast<std::size_t>(i));
    return quotient_dim(spaces.numerator, spaces.denominator);
}

// ---------------------------------------------------------------------------
// Limit terms, graded rank-profile route

/// dim E_∞^{p,q} for 0 <= p <= k-1 and 0 <= p+q <= m, with the Betti numbers they sum to.
struct EInftyTable {
    std::size_t nilpotency_index = 0;
    std::size_t dim = 0;
    std::size_t max_degree = 0;
    std::map<std::pair<long, long>, std::size_t> dims;
    std::vector<std::size_t> betti;

    std::size_t at(long p, long q) const
    {
        auto it = dims.find({p, q});
        return it == dims.end() ? 0 : it->second;
    }

    std::size_t antidiagonal_sum(long i) const
    {
        std::size_t s = 0;
        for (const auto& [pq, n] : dims)
            if (pq.first + pq.second == i)
                s += n;
        return s;
    }
};

struct TableOptions {
    /// Highest total degree p+q to compute; defaults to the dimension.
    std::optional<std::size_t> max_degree;
    /// Check every antidiagonal against independently computed Betti numbers.
    bool verify = true;
};

namespace detail {

/// The algebra in a basis adapted to its lower central series, with the
/// filtration level of every dual basis vector and a torus grading.
struct GradedLayout {
    LieAlgebra algebra;
    std::size_t nilpotency_index = 0;
    /// level[i] = smallest j with e^i ∈ V_j.
    std::vector<std::size_t> level;
    /// weight[i]: eigenvalues of a basis of the diagonal derivations on e_i.
    std::vector<std::vector<std::int64_t>> weight;
};

inline bool is_coordinate(const SubspaceBasis& s)
{
    return std::all_of(s.vectors().begin(), s.vectors().end(), [](const SparseVector& v) { return v.size() == 1; });
}

// Integer weights w with w_k = w_i + w_j whenever e_k occurs in [e_i, e_j].
inline std::vector<std::vector<std::int64_t>> diagonal_weights(const LieAlgebra& a)
{
    const std::size_t m = a.dim();
    std::vector<SparseVector> eqs;
    for (const auto& [key, value] : a.brackets())
        for (const auto& t : value) {
            std::vector<std::pair<std::size_t, Rational>> pairs{{t.index, Rational(1)}, {key.first, Rational(-1)}, {key.second, Rational(-1)}};
            eqs.push_back(vec::from_pairs(std::move(pairs)));
        }
    SubspaceBasis sol = kernel_basis(SparseMatrix::from_rows(m, eqs));
    std::vector<std::vector<std::int64_t>> w(m, std::vector<std::int64_t>(sol.dim(), 0));
    for (std::size_t s = 0; s < sol.dim(); ++s) {
        mpz_class lcm = 1;
        for (const auto& t : sol.vectors()[s])
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.value.to_mpq().get_den().get_mpz_t());
        for (const auto& t : sol.vectors()[s]) {
            mpq_class v = t.value.to_mpq() * lcm;
            if (!v.get_num().fits_slong_p())
                throw InternalError("torus weight overflow");
            w[t.index][s] = v.get_num().get_si();
        }
    }
    return w;
}

// Monomials of degree <= max_degree grouped by torus weight. Keys are a
// linear hash of the weight, so a collision only merges two d-stable blocks.
inline std::vector<std::vector<Monomial>> weight_blocks(std::size_t m, const std::vector<std::vector<std::int64_t>>& weight,
                                                       std::size_t max_degree)
{
    const std::size_t rank = weight.empty() ? 0 : weight[0].size();
    std::vector<std::uint64_t> key_of(m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t s = 0; s < rank; ++s)
            key_of[i] += (0x9E3779B97F4A7C15ULL * (2 * s + 1) + 0x632BE59BD9B4E019ULL * s) * static_cast<std::uint64_t>(weight[i][s]);
    std::unordered_map<std::uint64_t, std::size_t> block_id;
    std::vector<std::vector<Monomial>> blocks;
    for (std::size_t p = 0; p <= std::min(max_degree, m); ++p)
        for (Monomial mm : MonomialIndex(m, p).all()) {
            std::uint64_t key = 0;
            for (Monomial r = mm; r; r &= r - 1)
                key += key_of[static_cast<std::size_t>(std::countr_zero(r))];
            auto [it, inserted] = block_id.try_emplace(key, blocks.size());
            if (inserted)
                blocks.emplace_back();
            blocks[it->second].push_back(mm);
        }
    return blocks;
}

// Ranks of d_p restricted to one block, p = 0..max_degree, in lexicographic coordinates.
inline std::vector<std::size_t> block_ranks(const Coboundary& cob, const std::vector<Monomial>& block, std::size_t max_degree)
{
    std::vector<std::vector<Monomial>> by_degree(max_degree + 2);
    for (Monomial mm : block)
        if (mono::degree(mm) <= max_degree + 1)
            by_degree[mono::degree(mm)].push_back(mm);
    std::vector<std::size_t> ranks(max_degree + 1, 0);
    for (std::size_t p = 0; p <= max_degree; ++p) {
        auto& target = by_degree[p + 1];
        if (by_degree[p].empty() || target.empty())
            continue;
        std::sort(target.begin(), target.end(), mono::LexLess{});
        std::vector<SparseVector> cols;
        for (Monomial mm : by_degree[p]) {
            std::vector<std::pair<std::size_t, Rational>> pairs;
            cob.apply(mm, [&](Monomial t, const Rational& v) {
                auto it = std::lower_bound(target.begin(), target.end(), t, mono::LexLess{});
                if (it == target.end() || *it != t)
                    throw InternalError("differential leaves its weight space");
                pairs.emplace_back(static_cast<std::size_t>(it - target.begin()), v);
            });
            SparseVector c = vec::from_pairs(std::move(pairs));
            if (!c.empty())
                cols.push_back(std::move(c));
        }
        std::stable_sort(cols.begin(), cols.end(), [](const SparseVector& x, const SparseVector& y) { return x.size() < y.size(); });
        Echelon e(target.size());
        for (auto& c : cols)
            e.insert(std::move(c));
        ranks[p] = e.rank();
    }
    return ranks;
}

inline GradedLayout graded_layout(const LieAlgebra& a)
{
    SeriesReport series = lower_central_series(a);
    const std::size_t m = a.dim();
    const std::size_t k = series.nilpotency_index;
    GradedLayout g;
    g.nilpotency_index = k;
    bool adapted = std::all_of(series.ideals.begin(), series.ideals.end(), is_coordinate);
    if (adapted) {
        g.algebra = a;
    } else {
        // Deepest ideal first, then extend through the series.
        std::vector<SparseVector> basis;
        for (std::size_t j = k; j-- > 0;)
            for (const auto& v : series.ideals[j].vectors())
                if (!span(m, basis).contains(v))
                    basis.push_back(v);
        std::reverse(basis.begin(), basis.end());
        SparseMatrix change = SparseMatrix::from_columns(m, basis);
        SparseMatrix back = *inverse(change);
        g.algebra = LieAlgebra(a.labels());
        for (std::size_t s = 0; s < m; ++s)
            for (std::size_t t = s + 1; t < m; ++t)
                g.algebra.set_bracket(s, t, back.apply(a.bracket(basis[s], basis[t])));
        series = lower_central_series(g.algebra);
        if (!std::all_of(series.ideals.begin(), series.ideals.end(), is_coordinate))
            throw InternalError("series-adapted basis change failed");
    }
    g.level.assign(m, 1);
    for (std::size_t j = 1; j < series.ideals.size(); ++j)
        for (auto piv : series.ideals[j].pivots())
            g.level[piv] = j + 1;
    g.weight = diagonal_weights(g.algebra);
    return g;
}

// Per-degree contributions of one weight space of the complex:
// h[i][j] = dim(Z^i ∩ F_j) - dim(B^i ∩ F_j), where F_j = Λ^i V_j.
inline void accumulate_block(const GradedLayout& g, const Coboundary& cob, std::vector<Monomial> monos, std::size_t max_degree,
                             std::vector<std::vector<long>>& h)
{
    const std::size_t k = g.nilpotency_index;
    auto mono_level = [&](Monomial mm) {
        std::size_t l = 1;
        for (auto i : mono::indices(mm))
            l = std::max(l, g.level[i]);
        return l;
    };
    const std::size_t top = std::min(max_degree + 1, cob.dim());
    // layers[i]: the degree-i monomials of this block sorted by (level, lex).
    std::vector<std::vector<std::pair<std::size_t, Monomial>>> layers(top + 1);
    for (Monomial mm : monos)
        if (mono::degree(mm) <= top)
            layers[mono::degree(mm)].emplace_back(mono_level(mm), mm);
    std::vector<std::vector<Monomial>> sorted(top + 1);
    std::vector<std::vector<std::size_t>> lvl(top + 1);
    for (std::size_t i = 0; i <= top; ++i) {
        std::sort(layers[i].begin(), layers[i].end(), [](const auto& x, const auto& y) {
            return x.first != y.first ? x.first < y.first : mono::LexLess{}(x.second, y.second);
        });
        for (const auto& [l, mm] : layers[i]) {
            sorted[i].push_back(mm);
            lvl[i].push_back(l);
        }
    }
    std::vector<std::unordered_map<Monomial, std::size_t>> lookup(top + 1);
    for (std::size_t i = 0; i <= top; ++i)
        for (std::size_t t = 0; t < sorted[i].size(); ++t)
            lookup[i][sorted[i][t]] = t;
    auto find = [&](std::size_t i, Monomial mm) -> std::size_t {
        auto it = lookup[i].find(mm);
        if (it == lookup[i].end())
            throw InternalError("differential leaves its weight space");
        return it->second;
    };

    // images[i][u]: d of the u-th degree-i monomial, in degree-(i+1) local (ascending) coordinates.
    std::vector<std::vector<SparseVector>> images(top + 1);
    for (std::size_t i = 0; i < top; ++i) {
        images[i].resize(sorted[i].size());
        for (std::size_t u = 0; u < sorted[i].size(); ++u) {
            std::vector<std::pair<std::size_t, Rational>> pairs;
            cob.apply(sorted[i][u], [&](Monomial t, const Rational& v) { pairs.emplace_back(find(i + 1, t), v); });
            images[i][u] = vec::from_pairs(std::move(pairs));
        }
    }

    for (std::size_t i = 0; i <= std::min(max_degree, top); ++i) {
        const std::size_t n = sorted[i].size();
        if (n == 0)
            continue;
        // Z ∩ F_j: rank of d restricted to the columns of level <= j, via the column rank profile.
        std::vector<long> rank_le(k + 1, 0), exact_le(k + 1, 0), count_le(k + 1, 0);
        for (std::size_t t = 0; t < n; ++t)
            for (std::size_t j = lvl[i][t]; j <= k; ++j)
                ++count_le[j];
        if (i < top) {
            std::vector<SparseVector> rows(sorted[i + 1].size());
            for (std::size_t u = 0; u < n; ++u)
                for (const auto& t : images[i][u])
                    rows[t.index].push_back(Term{u, t.value});
            std::stable_sort(rows.begin(), rows.end(), [](const SparseVector& x, const SparseVector& y) { return x.size() < y.size(); });
            Echelon e(n);
            for (auto& r : rows)
                if (!r.empty())
                    e.insert(std::move(r));
            for (auto piv : e.pivots())
                for (std::size_t j = lvl[i][piv]; j <= k; ++j)
                    ++rank_le[j];
        }
        // B ∩ F_j: image of d_{i-1} in coordinates ordered by descending level;
        // an echelon vector lies in F_j iff its pivot does.
        if (i > 0) {
            Echelon e(n);
            std::vector<SparseVector> cols;
            cols.reserve(images[i - 1].size());
            for (const auto& img : images[i - 1]) {
                if (img.empty())
                    continue;
                SparseVector r;
                r.reserve(img.size());
                for (auto it = img.rbegin(); it != img.rend(); ++it)
                    r.push_back(Term{n - 1 - it->index, it->value});
                cols.push_back(std::move(r));
            }
            std::stable_sort(cols.begin(), cols.end(), [](const SparseVector& x, const SparseVector& y) { return x.size() < y.size(); });
            for (auto& c : cols)
                e.insert(std::move(c));
            for (auto piv : e.pivots())
                for (std::size_t j = lvl[i][n - 1 - piv]; j <= k; ++j)
                    ++exact_le[j];
        }
        for (std::size_t j = 0; j <= k; ++j)
            h[i][j] += count_le[j] - rank_le[j] - exact_le[j];
    }
}

} // namespace detail

/// Betti numbers b_0..b_{max_degree}, from ranks of the differential on each torus weight space.
inline std::vector<std::size_t> betti_numbers(const LieAlgebra& a, std::optional<std::size_t> max_degree = std::nullopt)
{
    const std::size_t m = a.dim();
    const std::size_t top = std::min(max_degree.value_or(m), m);
    Coboundary cob(a);
    auto blocks = detail::weight_blocks(m, detail::diagonal_weights(a), std::min(top + 1, m));
    std::vector<std::size_t> r(top + 1, 0);
    std::mutex r_mutex;
    parallel_for(blocks.size(), [&](std::size_t b) {
        auto local = detail::block_ranks(cob, blocks[b], top);
        std::lock_guard lock(r_mutex);
        for (std::size_t p = 0; p <= top; ++p)
            r[p] += local[p];
    });
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i <= top; ++i)
        out.push_back(static_cast<std::size_t>(binomial(m, i)) - r[i] - (i > 0 ? r[i - 1] : 0));
    return out;
}

inline std::size_t betti(const LieAlgebra& a, std::size_t i)
{
    if (i > a.dim())
        return 0;
    return betti_numbers(a, i).back();
}

/// All limit terms at once, by splitting the complex into torus weight spaces
/// and reading filtered dimensions off rank profiles.
inline EInftyTable e_infty_table(const LieAlgebra& a, const TableOptions& options = {})
{
    const std::size_t m = a.dim();
    if (m > 30)
        throw InvalidArgument("E_infinity tables are limited to dimension 30");
    detail::GradedLayout g = detail::graded_layout(a);
    const std::size_t k = g.nilpotency_index;
    const std::size_t max_degree = std::min(options.max_degree.value_or(m), m);
    Coboundary cob(g.algebra);

    auto blocks = detail::weight_blocks(m, g.weight, std::min(max_degree + 1, m));

    std::vector<std::vector<long>> h(m + 1, std::vector<long>(k + 1, 0));
    std::mutex h_mutex;
    parallel_for(blocks.size(), [&](std::size_t b) {
        std::vector<std::vector<long>> local(m + 1, std::vector<long>(k + 1, 0));
        detail::accumulate_block(g, cob, std::move(blocks[b]), max_degree, local);
        std::lock_guard lock(h_mutex);
        for (std::size_t i = 0; i <= m; ++i)
            for (std::size_t j = 0; j <= k; ++j)
                h[i][j] += local[i][j];
    });

    EInftyTable table;
    table.nilpotency_index = k;
    table.dim = m;
    table.max_degree = max_degree;
    for (std::size_t i = 0; i <= max_degree; ++i)
        for (std::size_t p = 0; p < k; ++p) {
            long v = h[i][k - p] - h[i][k - p - 1];
            if (v < 0)
                throw InternalError("negative limit-term dimension");
            table.dims[{static_cast<long>(p), static_cast<long>(i) - static_cast<long>(p)}] = static_cast<std::size_t>(v);
        }
    if (options.verify)
        table.betti = betti_numbers(a, max_degree);
    else
        for (std::size_t i = 0; i <= max_degree; ++i)
            table.betti.push_back(static_cast<std::size_t>(h[i][k]));
    if (options.verify)
        for (std::size_t i = 0; i <= max_degree; ++i)
            if (table.antidiagonal_sum(static_cast<long>(i)) != table.betti[i])
                throw DecompositionMismatch("limit terms of degree " + std::to_string(i) + " sum to " +
                                            std::to_string(table.antidiagonal_sum(static_cast<long>(i))) + ", Betti number is " +
                                            std::to_string(table.betti[i]));
    return table;
}

// ---------------------------------------------------------------------------
// Classes and the automorphism action

/// A cohomology class held as its unique representative reduced against the
/// echelon basis of the subspace it is taken modulo.
struct CohomologyClass {
    enum class Kind { Full, Graded };
    std::size_t degree = 0;
    KForm representative{0, 0};
    Kind kind = Kind::Full;

    bool is_zero() const { return representative.is_zero(); }
    friend bool operator==(const CohomologyClass& a, const CohomologyClass& b)
    {
        return a.degree == b.degree && a.kind == b.kind && a.representative == b.representative;
    }
};

/// Closed 2-forms lying in Λ²V_{k-1}; E_∞^{0,2} is Z² modulo this space.
inline SubspaceBasis e02_denominator(const LieAlgebra& a)
{
    FiltrationBasis f = filtration_from_series(lower_central_series(a));
    const std::size_t k = f.nilpotency_index();
    SubspaceBasis low = exterior_power(f[k == 0 ? 0 : k - 1], 2);
    return restricted_kernel(differential_matrix(a, 2), low);
}

inline void require_closed(const LieAlgebra& a, const KForm& w)
{
    if (w.dim() != a.dim())
        throw DimensionMismatch("form and algebra dimensions differ");
    if (!d(a, w).is_zero())
        throw FormNotClosed("form is not closed");
}

/// [w]^{0,2}: the class of a closed 2-form in E_∞^{0,2}.
inline CohomologyClass e02_class(const LieAlgebra& a, const KForm& w)
{
    if (w.degree() != 2)
        throw InvalidArgument("e02_class needs a 2-form");
    require_closed(a, w);
    SubspaceBasis den = e02_denominator(a);
    return {2, KForm::from_coordinates(a.dim(), 2, den.reduce(w.coordinates())), CohomologyClass::Kind::Graded};
}

/// [w] in H^p.
inline CohomologyClass cohomology_class(const LieAlgebra& a, const KForm& w)
{
    require_closed(a, w);
    const std::size_t p = w.degree();
    SubspaceBasis exact(static_cast<std::size_t>(binomial(a.dim(), p)));
    if (p > 0) {
        SparseMatrix d_in = differential_matrix(a, p - 1);
        exact = image(d_in, SubspaceBasis::full(d_in.cols()));
    }
    return {p, KForm::from_coordinates(a.dim(), p, exact.reduce(w.coordinates())), CohomologyClass::Kind::Full};
}

/// The matrix sends e_j to column j. True iff invertible and [Ax, Ay] = A[x, y].
inline bool check_automorphism(const LieAlgebra& a, const SparseMatrix& A)
{
    const std::size_t m = a.dim();
    if (A.rows() != m || A.cols() != m)
        return false;
    if (determinant(A).is_zero())
        return false;
    SparseMatrix cols = A.transpose();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (a.bracket(cols.row(i), cols.row(j)) != A.apply(a.bracket(i, j)))
                return false;
    return true;
}

/// A·[w]^{0,2} = [(A^{-1})^* w]^{0,2}.
inline CohomologyClass aut_action_e02(const LieAlgebra& a, const SparseMatrix& A, const CohomologyClass& c)
{
    if (c.kind != CohomologyClass::Kind::Graded || c.degree != 2)
        throw InvalidArgument("aut_action_e02 acts on E_infinity^{0,2} classes");
    if (!check_automorphism(a, A))
        throw NotAnAutomorphism("matrix is not an automorphism of the algebra");
    return e02_class(a, pullback(c.representative, *inverse(A)));
}

} // namespace nilpo
