#pragma once

#include "nilpo/errors.hpp"
#include "nilpo/kform.hpp"
#include "nilpo/liealg.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace nilpo {

inline LieAlgebra abelian(std::size_t n)
{
    if (n == 0)
        throw InvalidArgument("abelian algebra needs dimension >= 1");
    return LieAlgebra(n);
}

/// [e_{2i-1}, e_{2i}] = e_n for i = 1..(n-1)/2.
inline LieAlgebra heisenberg(std::size_t n)
{
    if (n < 3 || n % 2 == 0)
        throw InvalidArgument("Heisenberg algebra needs odd dimension >= 3");
    LieAlgebra a(n);
    for (std::size_t i = 0; i + 1 < n - 1; i += 2)
        a.set_bracket(i, i + 1, vec::unit(n - 1));
    return a;
}

/// Free nilpotent algebra on m generators of class c <= 3, in the Hall basis
/// x_i, [x_i, x_j] (i > j), [[x_r, x_s], x_t] (r > s, t >= s).
inline LieAlgebra free_nilpotent(std::size_t m, std::size_t c)
{
    if (c == 0 || c > 3)
        throw InvalidArgument("free nilpotent algebras are supported for class 1..3 only");
    if (m < 2)
        throw InvalidArgument("free nilpotent algebra needs at least 2 generators");
    if (c == 1)
        return abelian(m);

    auto g = [](std::size_t i) { return "x" + std::to_string(i + 1); };
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < m; ++i)
        labels.push_back(g(i));
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j) {
            pair_index[{i, j}] = labels.size();
            labels.push_back("[" + g(i) + "," + g(j) + "]");
        }
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> triple_index;
    if (c == 3)
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t s = 0; s < r; ++s)
                for (std::size_t t = s; t < m; ++t) {
                    triple_index[{r, s, t}] = labels.size();
                    labels.push_back("[[" + g(r) + "," + g(s) + "]," + g(t) + "]");
                }

    LieAlgebra a(std::move(labels));
    for (const auto& [ij, idx] : pair_index)
        a.set_bracket(ij.first, ij.second, vec::unit(idx));
    if (c == 3)
        for (const auto& [ij, idx] : pair_index) {
            auto [i, j] = ij;
            for (std::size_t t = 0; t < m; ++t) {
                SparseVector v;
                if (t >= j) {
                    v = vec::unit(triple_index.at({i, j, t}));
                } else {
                    // [[x_i,x_j],x_t] = [[x_i,x_t],x_j] - [[x_j,x_t],x_i]
                    v = vec::sub(vec::unit(triple_index.at({i, t, j})), vec::unit(triple_index.at({j, t, i})));
                }
                a.set_bracket(idx, t, std::move(v));
            }
        }
    return a;
}

/// Simple graph on vertices 0..n-1.
struct Graph {
    std::size_t vertex_count = 0;
    std::set<std::pair<std::size_t, std::size_t>> edges;

    Graph() = default;
    Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& list) : vertex_count(n)
    {
        for (auto [u, v] : list)
            add_edge(u, v);
    }

    /// Stores {u, v} as (min, max); loops and repeats are errors.
    void add_edge(std::size_t u, std::size_t v)
    {
        if (u >= vertex_count || v >= vertex_count)
            throw InvalidArgument("edge endpoint out of range");
        if (u == v)
            throw InvalidArgument("graph loops are not allowed");
        if (!edges.insert({std::min(u, v), std::max(u, v)}).second)
            throw InvalidArgument("duplicate edge");
    }

    bool connected() const
    {
        if (vertex_count == 0)
            return true;
        std::vector<std::size_t> parent(vertex_count);
        for (std::size_t i = 0; i < vertex_count; ++i)
            parent[i] = i;
        auto root = [&](std::size_t x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (auto [u, v] : edges)
            parent[root(u)] = root(v);
        for (std::size_t i = 1; i < vertex_count; ++i)
            if (root(i) != root(0))
                return false;
        return true;
    }
};

/// Basis v_1..v_n then one e_{ij} per edge in lexicographic order; [v_i, v_j] = e_{ij}.
inline LieAlgebra graph_algebra(const Graph& g)
{
    if (g.edges.empty())
        throw InvalidArgument("graph algebra needs at least one edge");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < g.vertex_count; ++i)
        labels.push_back("v" + std::to_string(i + 1));
    for (auto [u, v] : g.edges)
        labels.push_back("e" + std::to_string(u + 1) + "_" + std::to_string(v + 1));
    LieAlgebra a(std::move(labels));
    std::size_t next = g.vertex_count;
    for (auto [u, v] : g.edges)
        a.set_bracket(u, v, vec::unit(next++));
    return a;
}

/// All labeled connected graphs with at least one edge on exactly n vertices.
inline std::vector<Graph> connected_graphs(std::size_t n)
{
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            slots.emplace_back(u, v);
    std::vector<Graph> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << slots.size()); ++mask) {
        Graph g;
        g.vertex_count = n;
        for (std::size_t s = 0; s < slots.size(); ++s)
            if ((mask >> s) & 1U)
                g.edges.insert(slots[s]);
        if (g.connected())
            out.push_back(std::move(g));
    }
    return out;
}

/// The 6-dimensional 3-step algebra [e1,e2]=e4, [e1,e3]=e5, [e1,e4]=e6 and two symplectic forms on it.
struct SixDimExample {
    LieAlgebra algebra;
    KForm omega1{6, 2};
    KForm omega2{6, 2};
};

inline SixDimExample example_six_dim()
{
    SixDimExample ex;
    ex.algebra = LieAlgebra(6);
    ex.algebra.set_bracket(0, 1, vec::unit(3));
    ex.algebra.set_bracket(0, 2, vec::unit(4));
    ex.algebra.set_bracket(0, 3, vec::unit(5));
    auto e = [](std::size_t i, std::size_t j, int c = 1) { return KForm::monomial(6, {i - 1, j - 1}, Rational(c)); };
    ex.omega1 = e(1, 6) - e(2, 4) + e(3, 5);
    ex.omega2 = e(1, 6) + e(2, 5) + e(3, 4);
    return ex;
}

} // namespace nilpo
