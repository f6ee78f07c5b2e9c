#include "nilpo/constructors.hpp"
#include "nilpo/symplectic.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace nilpo;

namespace {

KForm random_two_form(oracle::Lcg& g, std::size_t m)
{
    KForm w(m, 2);
    for (Monomial mm : MonomialIndex(m, 2).all())
        w.add(mm, Rational(static_cast<long long>(g.range(-4, 4))));
    return w;
}

oracle::Dense dense(const SparseMatrix& m)
{
    oracle::Dense d(m.rows(), std::vector<oracle::Q>(m.cols(), 0));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (const auto& t : m.row(r))
            d[r][t.index] = t.value.to_mpq();
    return d;
}

using Status = SymplecticVerdict::Status;
using Reason = SymplecticVerdict::Reason;

} // namespace

TEST(Gram, AntisymmetricAndPfaffian)
{
    oracle::Lcg g(3);
    for (std::size_t m : {2, 4, 6})
        for (int trial = 0; trial < 10; ++trial) {
            KForm w = random_two_form(g, m);
            SparseMatrix gm = gram_matrix(w);
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j)
                    EXPECT_EQ(gm.at(i, j), -gm.at(j, i));
            oracle::Q pf = oracle::pfaffian(dense(gm));
            EXPECT_EQ(determinant(gm).to_mpq(), oracle::Q(pf * pf));
            EXPECT_EQ(is_nondegenerate(w), pf != 0);
        }
    EXPECT_THROW(gram_matrix(KForm(3, 1)), InvalidArgument);
}

TEST(Gram, StandardForm)
{
    KForm w = KForm::monomial(4, {0, 1}) + KForm::monomial(4, {2, 3});
    EXPECT_TRUE(is_nondegenerate(w));
    EXPECT_FALSE(is_nondegenerate(KForm::monomial(4, {0, 1})));
}

TEST(Witness, SixDimensional)
{
    auto six = example_six_dim();
    EXPECT_TRUE(is_nondegenerate(six.omega1));
    EXPECT_TRUE(is_nondegenerate(six.omega2));
    auto w = find_witness(six.algebra);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(d(six.algebra, *w).is_zero());
    EXPECT_TRUE(is_nondegenerate(*w));
    EXPECT_EQ(*w, *find_witness(six.algebra));
    EXPECT_FALSE(find_witness(heisenberg(3)).has_value());
}

TEST(Witness, SampleDependsOnlyOnSeedAndIndex)
{
    // Sample s with seed t is sample 0 with seed t + s.
    auto six = example_six_dim().algebra;
    for (std::uint64_t bound : {1, 2, 1000}) {
        auto many = find_witness(six, {.seed = 42, .samples = 8, .bound = bound});
        std::optional<KForm> first;
        for (std::uint64_t s = 0; s < 8 && !first; ++s)
            first = find_witness(six, {.seed = 42 + s, .samples = 1, .bound = bound});
        EXPECT_EQ(many, first);
    }
}

TEST(Witness, EffectiveBound)
{
    EXPECT_EQ(WitnessOptions{}.effective_bound(6), 1000000u);
    EXPECT_EQ((WitnessOptions{.seed = 1, .samples = 200000, .bound = 0}).effective_bound(10), 2000000u);
    EXPECT_EQ((WitnessOptions{.seed = 1, .samples = 1, .bound = 5}).effective_bound(10), 5u);
}

TEST(Decide, Ladder)
{
    auto odd = decide(heisenberg(3));
    EXPECT_EQ(odd.status, Status::CertifiedNonSymplectic);
    EXPECT_EQ(odd.reason, Reason::OddDimension);

    auto kt = decide(direct_sum(abelian(1), heisenberg(3)));
    EXPECT_EQ(kt.status, Status::Symplectic);
    ASSERT_TRUE(kt.witness.has_value());

    auto sl4 = decide(nilradical(Family::A, 3).algebra);
    EXPECT_EQ(sl4.status, Status::CertifiedNonSymplectic);
    EXPECT_EQ(sl4.reason, Reason::ObstructionVanishes);
    EXPECT_EQ(sl4.status_name(), "CertifiedNonSymplectic");
    EXPECT_EQ(sl4.reason_name(), "ObstructionVanishes");

    // No samples: the witness search cannot succeed and E_∞^{0,2} ≠ 0.
    auto none = decide(example_six_dim().algebra, {.seed = 42, .samples = 0, .bound = 0});
    EXPECT_EQ(none.status, Status::Inconclusive);
    EXPECT_EQ(none.failure_bound, Rational(1));
    EXPECT_EQ(none.status_name(), "Inconclusive");
}

TEST(Decide, InconclusiveFailureBound)
{
    // n_{2,3} ⊕ ℝ has no symplectic form but its obstruction is nonzero.
    LieAlgebra a = trivial_extension(free_nilpotent(2, 3), 1);
    ASSERT_NE(e_infty_dim(a, 0, 2), 0u);
    auto v = decide(a, {.seed = 1, .samples = 3, .bound = 10});
    EXPECT_EQ(v.status, Status::Inconclusive);
    EXPECT_EQ(v.degree_bound, 6u);
    EXPECT_EQ(v.sample_space_size, 21u);
    EXPECT_EQ(v.failure_bound, Rational(216, 9261));
}

TEST(Decide, SoundAcrossSeeds)
{
    const std::vector<LieAlgebra> non{nilradical(Family::A, 3).algebra, direct_sum(abelian(1), heisenberg(5)), heisenberg(5),
                                      trivial_extension(free_nilpotent(2, 3), 1),
                                      trivial_extension(nilradical(Family::A, 3).algebra, 2)};
    const std::vector<LieAlgebra> sym{example_six_dim().algebra, direct_sum(abelian(1), heisenberg(3)), abelian(4)};
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        WitnessOptions o{.seed = seed, .samples = 8, .bound = 0};
        for (const auto& a : non) {
            EXPECT_NE(decide(a, o).status, Status::Symplectic);
        }
        for (const auto& a : sym) {
            EXPECT_EQ(decide(a, o).status, Status::Symplectic) << seed;
        }
    }
}

TEST(Decide, SymplecticStaysSymplecticUnderPlaneExtension)
{
    for (const auto& a : {example_six_dim().algebra, direct_sum(abelian(1), heisenberg(3)), abelian(2)})
        EXPECT_EQ(decide(trivial_extension(a, 2)).status, Status::Symplectic);
}

TEST(Nilradicals, GradingAndClosedFormSupport)
{
    const std::vector<std::pair<Family, std::size_t>> cases{{Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 2},
                                                            {Family::B, 3}, {Family::C, 3}, {Family::D, 4}};
    for (auto [f, n] : cases) {
        auto g = nilradical(f, n);
        EXPECT_TRUE(check_grading(g)) << g.roots.name();
        EXPECT_TRUE(benson_gordon_check(g)) << g.roots.name();
    }
}

TEST(Nilradicals, CheckerRejectsTopLayerSupport)
{
    // Put e2 of h3 in level 2: the closed form e2∧e3 then pairs two top-level directions.
    auto g = nilradical(Family::A, 2);
    g.level_of_basis = {1, 2, 2};
    g.layers = {1, 2};
    EXPECT_FALSE(benson_gordon_check(g));
    EXPECT_FALSE(check_grading(g));
}
