// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "nilpo/nilpo.hpp"
#include "oracles.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <unordered_map>

using namespace nilpo;

namespace {

struct Named {
    std::string name;
    LieAlgebra algebra;
};

struct Check {
    bool ok = true;
    std::ostringstream notes;

    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            if (ok)
                notes << what;
            else
                notes << "; " << what;
            ok = false;
        }
    }
};

int failures = 0;

void run(int id, const std::string& title, const std::function<void(Check&)>& body)
{
    Check c;
    auto start = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.expect(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s  %2d  %s  (%.1f s)%s%s\n", c.ok ? "PASS" : "FAIL", id, title.c_str(), secs, c.ok ? "" : "  -- ",
                c.ok ? "" : c.notes.str().c_str());
    std::fflush(stdout);
    if (!c.ok)
        ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

oracle::Dense gram_dense(const KForm& w)
{
    const std::size_t m = w.dim();
    oracle::Dense g(m, std::vector<oracle::Q>(m, 0));
    for (const auto& [mm, c] : w.terms()) {
        auto ij = mono::indices(mm);
        g[ij[0]][ij[1]] = c.to_mpq();
        g[ij[1]][ij[0]] = -c.to_mpq();
    }
    return g;
}

// d(d(e^M)) = 0 for every monomial M, accumulated term by term.
bool square_is_zero(const LieAlgebra& a)
{
    Coboundary cob(a);
    const std::size_t m = a.dim();
    std::vector<Monomial> all;
    for (std::size_t p = 0; p + 2 <= m; ++p)
        for (Monomial mm : MonomialIndex(m, p).all())
            all.push_back(mm);
    std::atomic<bool> ok{true};
    parallel_for(all.size(), [&](std::size_t i) {
        std::unordered_map<Monomial, Rational> out;
        cob.apply(all[i], [&](Monomial t, const Rational& c) {
            cob.apply(t, [&](Monomial u, const Rational& v) { out[u] += c * v; });
        });
        for (const auto& [u, v] : out)
            if (!v.is_zero())
                ok = false;
    });
    return ok;
}

const std::vector<std::pair<Family, std::size_t>> kVanishing{{Family::A, 3}, {Family::A, 4}, {Family::A, 5}, {Family::B, 3}, {Family::B, 4},
                                                             {Family::C, 3}, {Family::C, 4}, {Family::D, 4}, {Family::D, 5}};
const std::vector<std::pair<Family, std::size_t>> kPositive{{Family::A, 1}, {Family::A, 2}, {Family::B, 2}};

std::vector<Named> random_graph_algebras(std::size_t count)
{
    oracle::Lcg g(2024);
    std::vector<Named> out;
    while (out.size() < count) {
        auto n = static_cast<std::size_t>(g.range(2, 5));
        auto graphs = connected_graphs(n);
        const Graph& pick = graphs[static_cast<std::size_t>(g.range(0, static_cast<long long>(graphs.size()) - 1))];
        std::string name = "graph" + std::to_string(n) + "{";
        for (auto [u, v] : pick.edges)
            name += std::to_string(u + 1) + "-" + std::to_string(v + 1) + " ";
        name.back() = '}';
        out.push_back({name, graph_algebra(pick)});
    }
    return out;
}

std::vector<Named> corpus()
{
    std::vector<Named> c;
    for (std::size_t n = 1; n <= 6; ++n)
        c.push_back({"abelian" + std::to_string(n), abelian(n)});
    c.push_back({"h3", heisenberg(3)});
    c.push_back({"h5", heisenberg(5)});
    c.push_back({"n22", free_nilpotent(2, 2)});
    c.push_back({"n32", free_nilpotent(3, 2)});
    c.push_back({"n23", free_nilpotent(2, 3)});
    c.push_back({"n33", free_nilpotent(3, 3)});
    c.push_back({"six", example_six_dim().algebra});
    for (const auto& list : {kPositive, kVanishing})
        for (auto [f, n] : list) {
            auto g = nilradical(f, n);
            c.push_back({g.roots.name(), std::move(g.algebra)});
        }
    for (auto& g : random_graph_algebras(10))
        c.push_back(std::move(g));
    return c;
}

} // namespace

int main()
{
    const auto all = corpus();
    std::vector<std::pair<LieAlgebra, KForm>> symplectic_pairs;

    run(1, "E_inf^{0,2} = 0 for A3-5, B3-4, C3-4, D4-5 nilradicals", [&](Check& c) {
        for (auto [f, n] : kVanishing) {
            auto t = std::chrono::steady_clock::now();
            auto g = nilradical(f, n);
            std::size_t e02 = e_infty_dim(g.algebra, 0, 2);
            double secs = seconds_since(t);
            c.expect(e02 == 0, g.roots.name() + " has E02 = " + std::to_string(e02));
            c.expect(e_infty_table(g.algebra, {.max_degree = 2, .verify = true}).at(0, 2) == 0, g.roots.name() + " table disagrees");
            if (n == 3)
                c.expect(secs < 1.0, g.roots.name() + " took " + std::to_string(secs) + " s");
            c.expect(secs < 300.0, g.roots.name() + " took " + std::to_string(secs) + " s");
        }
    });

    run(2, "A1, A2, B2 trivial extensions carry verified symplectic witnesses", [&](Check& c) {
        for (auto [f, n] : kPositive) {
            auto t = std::chrono::steady_clock::now();
            auto g = nilradical(f, n);
            LieAlgebra ext = trivial_extension(g.algebra, g.algebra.dim() % 2);
            auto v = decide(ext);
            c.expect(v.status == SymplecticVerdict::Status::Symplectic && v.witness.has_value(), g.roots.name() + " not Symplectic");
            if (!v.witness)
                continue;
            // Independent re-check: dω via the derivation formula, det via dense elimination.
            oracle::Dense d2 = oracle::differential(ext, 2);
            auto coords = v.witness->coordinates();
            bool closed = true;
            for (const auto& row : d2) {
                oracle::Q s = 0;
                for (const auto& term : coords)
                    s += row[term.index] * term.value.to_mpq();
                closed = closed && s == 0;
            }
            c.expect(closed, g.roots.name() + " witness not closed");
            c.expect(oracle::det(gram_dense(*v.witness)) != 0, g.roots.name() + " witness degenerate");
            c.expect(seconds_since(t) < 1.0, g.roots.name() + " slower than 1 s");
            symplectic_pairs.emplace_back(ext, *v.witness);
        }
    });

    run(3, "default classification: symplectic exactly for A1, A2, B2", [&](Check& c) {
        auto rows = classify(default_ranges());
        std::size_t positives = 0;
        for (const auto& r : rows) {
            bool expected = r.name() == "A1" || r.name() == "A2" || r.name() == "B2";
            if (expected) {
                ++positives;
                c.expect(r.verdict.status == SymplecticVerdict::Status::Symplectic, r.name() + " should be Symplectic");
            } else {
                c.expect(r.verdict.status == SymplecticVerdict::Status::CertifiedNonSymplectic, r.name() + " should be CertifiedNonSymplectic");
            }
        }
        c.expect(positives == 3, "default ranges miss a positive case");
    });

    run(4, "free n_{m,3}: E_inf^{0,2} != 0 for m = 2, 3; no witness for n_{3,3}", [&](Check& c) {
        c.expect(e_infty_dim(free_nilpotent(2, 3), 0, 2) != 0, "n23 has E02 = 0");
        LieAlgebra n33 = free_nilpotent(3, 3);
        c.expect(e_infty_dim(n33, 0, 2) != 0, "n33 has E02 = 0");
        for (std::uint64_t seed : {1, 2, 3, 42}) {
            auto v = decide(n33, {.seed = seed, .samples = 256, .bound = 0});
            c.expect(v.status != SymplecticVerdict::Status::Symplectic, "n33 witness found with seed " + std::to_string(seed));
        }
    });

    run(5, "antidiagonal sums of E_inf equal Betti numbers on the corpus", [&](Check& c) {
        for (const auto& [name, a] : all) {
            EInftyTable t = e_infty_table(a);
            for (std::size_t i = 0; i <= a.dim(); ++i)
                c.expect(t.antidiagonal_sum(static_cast<long>(i)) == t.betti[i], name + " degree " + std::to_string(i));
            // Betti numbers themselves against independent references.
            if (a.dim() <= 10) {
                for (std::size_t i = 0; i <= a.dim(); ++i)
                    c.expect(t.betti[i] == oracle::betti(a, i), name + " betti " + std::to_string(i));
            }
        }
        for (const auto& list : {kPositive, kVanishing})
            for (auto [f, n] : list)
                c.expect(betti_numbers(nilradical(f, n).algebra) == oracle::weyl_length_counts(family_letter(f), n),
                         std::string(1, family_letter(f)) + std::to_string(n) + " Betti numbers differ from Weyl counts");
    });

    run(6, "dim E_inf^{0,2}(n) = dim E_inf^{1,1}(central extension) + 1", [&](Check& c) {
        auto six = example_six_dim();
        auto pairs = symplectic_pairs;
        pairs.emplace_back(six.algebra, six.omega1);
        c.expect(pairs.size() == 4, "missing symplectic pairs from criterion 2");
        for (const auto& [n, w] : pairs) {
            LieAlgebra ext = central_extension(n, w);
            c.expect(e_infty_dim(n, 0, 2) == e_infty_dim(ext, 1, 1) + 1, "fails in dimension " + std::to_string(n.dim()));
        }
    });

    run(7, "R + h relations and E_inf^{0,2} stable under trivial extensions", [&](Check& c) {
        for (const auto& [name, h] : std::vector<Named>{{"h3", heisenberg(3)}, {"n23", free_nilpotent(2, 3)}, {"six", example_six_dim().algebra}}) {
            LieAlgebra n = direct_sum(abelian(1), h);
            const long k = static_cast<long>(lower_central_series(n).nilpotency_index);
            auto E = [](const LieAlgebra& a, long p, long q) { return static_cast<long>(e_infty_dim(a, p, q)); };
            for (long p = 0; p <= k - 2; ++p)
                c.expect(E(n, p, -p) == 0, name + " (1) p=" + std::to_string(p));
            c.expect(E(n, k - 1, 1 - k) == 1, name + " (1) top");
            c.expect(E(n, k - 1, 2 - k) == E(h, k - 1, 2 - k) + 1, name + " (2)");
            for (long p = 0; p <= k - 2; ++p)
                c.expect(E(n, p, 1 - p) == E(h, p, 1 - p), name + " (3) p=" + std::to_string(p));
            for (long i = 2; i <= static_cast<long>(n.dim()); ++i)
                for (long p = 0; p < k; ++p)
                    c.expect(E(n, p, i - p) == E(h, p, i - p) + E(h, p, i - p - 1), name + " (4) p=" + std::to_string(p) + " i=" + std::to_string(i));
        }
        for (const auto& [name, a] : all) {
            if (a.is_abelian())
                continue;
            const std::size_t base = e_infty_table(a, {.max_degree = 2, .verify = false}).at(0, 2);
            for (std::size_t s = 1; s <= 3; ++s)
                c.expect(e_infty_table(trivial_extension(a, s), {.max_degree = 2, .verify = false}).at(0, 2) == base,
                         name + " s=" + std::to_string(s));
            if (a.dim() <= 12)
                c.expect(e_infty_dim(trivial_extension(a, 1), 0, 2) == e_infty_dim(a, 0, 2), name + " literal s=1");
        }
    });

    run(8, "six-dimensional example: [w1] = [w2] = [e1^e6] != 0 in E_inf^{0,2}", [&](Check& c) {
        auto six = example_six_dim();
        auto c1 = e02_class(six.algebra, six.omega1);
        auto c2 = e02_class(six.algebra, six.omega2);
        auto c16 = e02_class(six.algebra, KForm::monomial(6, {0, 5}));
        c.expect(c1 == c2, "[w1] != [w2]");
        c.expect(c2 == c16, "[w2] != [e16]");
        c.expect(!c16.is_zero(), "[e16] = 0");
    });

    run(9, "structural invariants: d^2 = 0, b1, b2 >= 2, filtrations, gradings", [&](Check& c) {
        for (const auto& [name, a] : all) {
            c.expect(validate(a).empty(), name + " invalid");
            c.expect(square_is_zero(a), name + " d^2 != 0");
            auto s = lower_central_series(a);
            auto b = betti_numbers(a, 2);
            c.expect(b[1] == a.dim() - s.ideals[1].dim(), name + " b1");
            if (!a.is_abelian())
                c.expect(b[2] >= 2, name + " b2 < 2");
            c.expect(filtration_from_series(s).spaces == filtration_recursive(a).spaces, name + " filtrations differ");
        }
        for (const auto& list : {kPositive, kVanishing})
            for (auto [f, n] : list) {
                auto g = nilradical(f, n);
                c.expect(check_grading(g), g.roots.name() + " grading");
                c.expect(benson_gordon_check(g), g.roots.name() + " closed 2-form support");
            }
    });

    run(10, "E_inf^{0,2} != 0 for every connected graph on <= 5 vertices", [&](Check& c) {
        std::size_t count = 0;
        for (std::size_t n = 2; n <= 5; ++n)
            for (const auto& g : connected_graphs(n)) {
                ++count;
                LieAlgebra a = graph_algebra(g);
                c.expect(e_infty_dim(a, 0, 2) != 0, "graph on " + std::to_string(n) + " vertices with " + std::to_string(g.edges.size()) + " edges");
            }
        c.expect(count == 1 + 4 + 38 + 728, "graph enumeration count " + std::to_string(count));
    });

    std::printf("%s: %d criteria failed\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
