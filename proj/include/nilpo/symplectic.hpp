#pragma once

#include "nilpo/cohomology.hpp"
#include "nilpo/exactlin.hpp"
#include "nilpo/exterior.hpp"
#include "nilpo/kform.hpp"
#include "nilpo/liealg.hpp"
#include "nilpo/rootsys.hpp"

#include <algorithm>
#include <cstdint>
#include <gmpxx.h>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace nilpo {

/// ker d_2 in lexicographic Λ² coordinates.
inline SubspaceBasis closed_two_forms(const LieAlgebra& a)
{
    if (a.dim() < 2)
        return SubspaceBasis(0);
    return kernel_basis(differential_matrix(a, 2));
}

/// M[i][j] = w(e_i, e_j).
inline SparseMatrix gram_matrix(const KForm& w)
{
    if (w.degree() != 2)
        throw InvalidArgument("Gram matrix needs a 2-form");
    SparseMatrix g(w.dim(), w.dim());
    for (const auto& [m, c] : w.terms()) {
        auto idx = mono::indices(m);
        g.set(idx[0], idx[1], c);
        g.set(idx[1], idx[0], -c);
    }
    return g;
}

inline bool is_nondegenerate(const KForm& w) { return !determinant(gram_matrix(w)).is_zero(); }

/// True iff E_∞^{0,2} vanishes, in which case no trivial extension is symplectic.
inline bool obstruction_vanishes(const LieAlgebra& a) { return e_infty_dim(a, 0, 2) == 0; }

struct WitnessOptions {
    std::uint64_t seed = 42;
    std::size_t samples = 64;
    /// Coefficient range [-B, B]; 0 selects max(10^6, m * samples).
    std::uint64_t bound = 0;

    std::uint64_t effective_bound(std::size_t m) const
    {
        if (bound != 0)
            return bound;
        return std::max<std::uint64_t>(1000000, static_cast<std::uint64_t>(m) * samples);
    }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Uniform on [-bound, bound] by rejection, identical on every platform.
inline std::int64_t draw(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t span = 2 * bound + 1;
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
    std::uint64_t x;
    do
        x = rng();
    while (x >= limit);
    return static_cast<std::int64_t>(x % span) - static_cast<std::int64_t>(bound);
}

// Basis vector scaled to a primitive integer vector.
inline SparseVector primitive(const SparseVector& v)
{
    mpz_class lcm = 1, gcd = 0;
    for (const auto& t : v)
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), t.value.to_mpq().get_den().get_mpz_t());
    for (const auto& t : v) {
        mpz_class n = mpq_class(t.value.to_mpq() * lcm).get_num();
        mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), n.get_mpz_t());
    }
    SparseVector out = v;
    for (auto& t : out)
        t.value = Rational(mpq_class(t.value.to_mpq() * lcm / gcd));
    return out;
}

} // namespace detail

/// Searches random integer combinations of the closed 2-forms for one with
/// nonzero Gram determinant. Sample s depends only on (seed, s).
inline std::optional<KForm> find_witness(const LieAlgebra& a, const WitnessOptions& options = {})
{
    const std::size_t m = a.dim();
    if (m % 2 != 0 || m == 0)
        return std::nullopt;
    SubspaceBasis z = closed_two_forms(a);
    std::vector<SparseVector> basis;
    for (const auto& v : z.vectors())
        basis.push_back(detail::primitive(v));
    const std::uint64_t bound = options.effective_bound(m);
    for (std::size_t s = 0; s < options.samples; ++s) {
        std::mt19937_64 rng(detail::splitmix64(options.seed + s));
        SparseVector coords;
        for (const auto& v : basis)
            coords = vec::axpy(coords, Rational(static_cast<long long>(detail::draw(rng, bound))), v);
        KForm w = KForm::from_coordinates(m, 2, coords);
        if (is_nondegenerate(w))
            return w;
    }
    return std::nullopt;
}

struct SymplecticVerdict {
    enum class Status { Symplectic, CertifiedNonSymplectic, Inconclusive };
    enum class Reason { None, OddDimension, ObstructionVanishes };

    Status status = Status::Inconclusive;
    Reason reason = Reason::None;
    std::optional<KForm> witness;
    std::size_t samples = 0;
    std::size_t degree_bound = 0;
    std::uint64_t sample_space_size = 0;
    /// (degree_bound / sample_space_size)^samples.
    Rational failure_bound;

    std::string status_name() const
    {
        switch (status) {
        case Status::Symplectic: return "Symplectic";
        case Status::CertifiedNonSymplectic: return "CertifiedNonSymplectic";
        case Status::Inconclusive: return "Inconclusive";
        }
        return "";
    }

    std::string reason_name() const
    {
        switch (reason) {
        case Reason::None: return "";
        case Reason::OddDimension: return "OddDimension";
        case Reason::ObstructionVanishes: return "ObstructionVanishes";
        }
        return "";
    }
};

/// Odd dimension, then witness search, then the E_∞^{0,2} obstruction; otherwise inconclusive.
inline SymplecticVerdict decide(const LieAlgebra& a, const WitnessOptions& options = {})
{
    SymplecticVerdict v;
    const std::size_t m = a.dim();
    if (m % 2 != 0) {
        v.status = SymplecticVerdict::Status::CertifiedNonSymplectic;
        v.reason = SymplecticVerdict::Reason::OddDimension;
        return v;
    }
    if (auto w = find_witness(a, options)) {
        if (!d(a, *w).is_zero() || !is_nondegenerate(*w))
            throw InternalError("witness failed exact re-verification");
        v.status = SymplecticVerdict::Status::Symplectic;
        v.witness = std::move(w);
        return v;
    }
    if (obstruction_vanishes(a)) {
        v.status = SymplecticVerdict::Status::CertifiedNonSymplectic;
        v.reason = SymplecticVerdict::Reason::ObstructionVanishes;
        return v;
    }
    v.samples = options.samples;
    v.degree_bound = m;
    v.sample_space_size = 2 * options.effective_bound(m) + 1;
    Rational ratio(static_cast<long long>(m), static_cast<long long>(v.sample_space_size));
    v.failure_bound = Rational(1);
    for (std::size_t s = 0; s < v.samples; ++s)
        v.failure_bound *= ratio;
    return v;
}

/// Every bracket [L_i, L_j] lies in L_{i+j}.
inline bool check_grading(const GradedNilradical& g)
{
    const auto& a = g.algebra;
    for (const auto& [key, value] : a.brackets())
        for (const auto& t : value)
            if (g.level_of_basis[t.index] != g.level_of_basis[key.first] + g.level_of_basis[key.second])
                return false;
    return true;
}

/// Closed 2-forms have no component in L_k*∧L_j* for 2 <= j <= k.
inline bool benson_gordon_check(const GradedNilradical& g)
{
    const std::size_t k = g.nilpotency_index();
    if (k <= 1)
        return true;
    SubspaceBasis z = closed_two_forms(g.algebra);
    MonomialIndex idx(g.algebra.dim(), 2);
    for (const auto& v : z.vectors())
        for (const auto& t : v) {
            auto ij = mono::indices(idx.unrank(t.index));
            std::size_t lo = std::min(g.level_of_basis[ij[0]], g.level_of_basis[ij[1]]);
            std::size_t hi = std::max(g.level_of_basis[ij[0]], g.level_of_basis[ij[1]]);
            if (hi == k && lo >= 2)
                return false;
        }
    return true;
}

} // namespace nilpo
