#pragma once

#include "nilpo/errors.hpp"
#include "nilpo/exactlin.hpp"
#include "nilpo/rational.hpp"

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace nilpo {

/// Index set {i_1 < ... < i_p} of a wedge monomial e^{i_1}∧...∧e^{i_p}, as a bit mask.
using Monomial = std::uint64_t;

/// Largest ambient dimension representable by Monomial.
inline constexpr std::size_t kMaxDim = 64;

namespace mono {

inline std::size_t degree(Monomial m) { return static_cast<std::size_t>(std::popcount(m)); }

inline Monomial bit(std::size_t i) { return Monomial{1} << i; }

inline bool contains(Monomial m, std::size_t i) { return (m >> i) & 1U; }

/// Bits strictly below position i.
inline Monomial below(std::size_t i) { return i >= 64 ? ~Monomial{0} : bit(i) - 1; }

/// Bits strictly above position i.
inline Monomial above(std::size_t i) { return i >= 63 ? Monomial{0} : ~(bit(i + 1) - 1); }

inline std::vector<std::size_t> indices(Monomial m)
{
    std::vector<std::size_t> out;
    while (m) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

/// Lexicographic order on the sorted index tuples (degrees compared first).
struct LexLess {
    bool operator()(Monomial a, Monomial b) const
    {
        if (a == b)
            return false;
        auto da = std::popcount(a), db = std::popcount(b);
        if (da != db)
            return da < db;
        Monomial diff = a ^ b;
        return (a & diff & (~diff + 1)) != 0;
    }
};

/// Sign of the permutation sorting the concatenation (a, b); 0 if they share an index.
inline int wedge_sign(Monomial a, Monomial b)
{
    if (a & b)
        return 0;
    int inversions = 0;
    for (Monomial rest = b; rest; rest &= rest - 1) {
        auto y = static_cast<std::size_t>(std::countr_zero(rest));
        inversions += std::popcount(a & above(y));
    }
    return (inversions & 1) ? -1 : 1;
}

/// Sorts an index sequence; returns the permutation sign (0 on a repeated index) and the mask.
inline std::pair<int, Monomial> from_sequence(const std::vector<std::size_t>& seq)
{
    Monomial m = 0;
    int sign = 1;
    for (auto i : seq) {
        if (i >= kMaxDim)
            throw InvalidArgument("monomial index beyond supported dimension");
        if (contains(m, i))
            return {0, 0};
        if (std::popcount(m & above(i)) & 1)
            sign = -sign;
        m |= bit(i);
    }
    return {sign, m};
}

} // namespace mono

/// Binomial coefficients C(n, k) for n <= 64.
inline std::uint64_t binomial(std::size_t n, std::size_t k)
{
    static const auto table = [] {
        std::vector<std::vector<std::uint64_t>> t(kMaxDim + 1, std::vector<std::uint64_t>(kMaxDim + 1, 0));
        for (std::size_t i = 0; i <= kMaxDim; ++i) {
            t[i][0] = 1;
            for (std::size_t j = 1; j <= i; ++j)
                t[i][j] = t[i - 1][j - 1] + (j < i ? t[i - 1][j] : 0);
        }
        return t;
    }();
    if (k > n || n > kMaxDim)
        return 0;
    return table[n][k];
}

/// Lexicographic ranking of the degree-p monomials in dimension m.
class MonomialIndex {
public:
    MonomialIndex(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree)
    {
        if (dim > kMaxDim)
            throw InvalidArgument("dimension exceeds " + std::to_string(kMaxDim));
    }

    std::size_t size() const { return degree_ > dim_ ? 0 : static_cast<std::size_t>(binomial(dim_, degree_)); }

    std::size_t rank(Monomial m) const
    {
        std::size_t r = 0, prev = 0, t = 0;
        for (auto i : mono::indices(m)) {
            for (std::size_t v = prev; v < i; ++v)
                r += binomial(dim_ - 1 - v, degree_ - 1 - t);
            prev = i + 1;
            ++t;
        }
        return r;
    }

    Monomial unrank(std::size_t r) const
    {
        Monomial m = 0;
        std::size_t v = 0;
        for (std::size_t t = 0; t < degree_; ++t) {
            while (true) {
                std::size_t block = binomial(dim_ - 1 - v, degree_ - 1 - t);
                if (r < block)
                    break;
                r -= block;
                ++v;
            }
            m |= mono::bit(v++);
        }
        return m;
    }

    /// All monomials in lexicographic order.
    std::vector<Monomial> all() const
    {
        std::vector<Monomial> out;
        out.reserve(size());
        if (degree_ > dim_)
            return out;
        std::vector<std::size_t> c(degree_);
        for (std::size_t i = 0; i < degree_; ++i)
            c[i] = i;
        while (true) {
            Monomial m = 0;
            for (auto i : c)
                m |= mono::bit(i);
            out.push_back(m);
            std::size_t t = degree_;
            while (t > 0 && c[t - 1] == dim_ - degree_ + t - 1)
                --t;
            if (t == 0)
                break;
            ++c[t - 1];
            for (std::size_t u = t; u < degree_; ++u)
                c[u] = c[u - 1] + 1;
        }
        return out;
    }

private:
    std::size_t dim_;
    std::size_t degree_;
};

/// Alternating p-form on an m-dimensional space, in the dual monomial basis.
///
/// Wedge products follow the determinant convention: (e^1∧e^2)(e_1, e_2) = 1
/// with no factorial normalization.
class KForm {
public:
    using Terms = std::map<Monomial, Rational, mono::LexLess>;

    KForm(std::size_t dim, std::size_t degree) : dim_(dim), degree_(degree)
    {
        if (dim > kMaxDim)
            throw InvalidArgument("dimension exceeds " + std::to_string(kMaxDim));
    }

    /// c · e^{i_1}∧...∧e^{i_p} for an arbitrary (unsorted) index sequence.
    static KForm monomial(std::size_t dim, const std::vector<std::size_t>& seq, const Rational& c = Rational(1))
    {
        KForm f(dim, seq.size());
        for (auto i : seq)
            if (i >= dim)
                throw InvalidArgument("form index out of range");
        auto [sign, m] = mono::from_sequence(seq);
        if (sign != 0)
            f.add(m, sign > 0 ? c : -c);
        return f;
    }

    static KForm one_form(std::size_t dim, std::size_t i) { return monomial(dim, {i}); }

    static KForm constant(std::size_t dim, const Rational& c)
    {
        KForm f(dim, 0);
        f.add(0, c);
        return f;
    }

    /// Form with the given coordinates in the lexicographic monomial basis.
    static KForm from_coordinates(std::size_t dim, std::size_t degree, const SparseVector& coords)
    {
        KForm f(dim, degree);
        MonomialIndex idx(dim, degree);
        for (const auto& t : coords) {
            if (t.index >= idx.size())
                throw DimensionMismatch("coordinate beyond number of monomials");
            f.add(idx.unrank(t.index), t.value);
        }
        return f;
    }

    SparseVector coordinates() const
    {
        MonomialIndex idx(dim_, degree_);
        SparseVector out;
        out.reserve(terms_.size());
        // Lexicographic map order matches increasing rank.
        for (const auto& [m, c] : terms_)
            out.push_back(Term{idx.rank(m), c});
        return out;
    }

    std::size_t dim() const { return dim_; }
    std::size_t degree() const { return degree_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(Monomial m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational() : it->second;
    }

    void add(Monomial m, const Rational& c)
    {
        if (c.is_zero())
            return;
        if (mono::degree(m) != degree_)
            throw InvalidArgument("monomial degree does not match form degree");
        if (dim_ < kMaxDim && (m >> dim_) != 0)
            throw InvalidArgument("monomial index out of range");
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    /// Value on basis vectors e_{j_1}, ..., e_{j_p}.
    Rational evaluate(const std::vector<std::size_t>& args) const
    {
        if (args.size() != degree_)
            throw InvalidArgument("wrong number of arguments for form");
        auto [sign, m] = mono::from_sequence(args);
        if (sign == 0)
            return Rational();
        Rational c = coefficient(m);
        return sign > 0 ? c : -c;
    }

    /// Value on arbitrary vectors: sum over terms of coefficient times a minor.
    Rational evaluate(const std::vector<SparseVector>& args) const
    {
        if (args.size() != degree_)
            throw InvalidArgument("wrong number of arguments for form");
        Rational total;
        for (const auto& [m, c] : terms_) {
            auto idx = mono::indices(m);
            SparseMatrix minor(degree_, degree_);
            for (std::size_t a = 0; a < degree_; ++a)
                for (std::size_t b = 0; b < degree_; ++b)
                    minor.set(a, b, vec::coefficient(args[b], idx[a]));
            total += c * determinant(minor);
        }
        return total;
    }

    KForm& operator+=(const KForm& o)
    {
        check_compatible(o);
        for (const auto& [m, c] : o.terms_)
            add(m, c);
        return *this;
    }
    KForm& operator-=(const KForm& o)
    {
        check_compatible(o);
        for (const auto& [m, c] : o.terms_)
            add(m, -c);
        return *this;
    }
    KForm& operator*=(const Rational& s)
    {
        if (s.is_zero())
            terms_.clear();
        for (auto& [m, c] : terms_)
            c *= s;
        return *this;
    }

    friend KForm operator+(KForm a, const KForm& b) { return a += b; }
    friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
    friend KForm operator*(const Rational& s, KForm a) { return a *= s; }
    friend KForm operator-(KForm a) { return a *= Rational(-1); }

    friend bool operator==(const KForm& a, const KForm& b)
    {
        return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    /// Human-readable rendering, e.g. "e1^e6 - e2^e4" (1-based indices).
    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            Rational a = c;
            if (first) {
                if (a.sign() < 0)
                    out += "-";
            } else {
                out += a.sign() < 0 ? " - " : " + ";
            }
            a = abs(a);
            std::string monostr;
            for (auto i : mono::indices(m))
                monostr += (monostr.empty() ? "e" : "^e") + std::to_string(i + 1);
            if (monostr.empty())
                out += a.to_string();
            else if (a.is_one())
                out += monostr;
            else
                out += a.to_string() + "*" + monostr;
            first = false;
        }
        return out;
    }

private:
    std::size_t dim_;
    std::size_t degree_;
    Terms terms_;

    void check_compatible(const KForm& o) const
    {
        if (o.dim_ != dim_ || o.degree_ != degree_)
            throw DimensionMismatch("forms of different dimension or degree");
    }
};

/// Exterior product; forms of total degree above the dimension give the zero form.
inline KForm wedge(const KForm& a, const KForm& b)
{
    if (a.dim() != b.dim())
        throw DimensionMismatch("wedge of forms on different spaces");
    KForm out(a.dim(), a.degree() + b.degree());
    if (out.degree() > out.dim())
        return out;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            int s = mono::wedge_sign(ma, mb);
            if (s != 0)
                out.add(ma | mb, s > 0 ? ca * cb : -(ca * cb));
        }
    return out;
}

} // namespace nilpo
