#pragma once

#include "nilpo/constructors.hpp"
#include "nilpo/errors.hpp"
#include "nilpo/liealg.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace nilpo {

using OrderedJson = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Algebra file document: schema_version, dim, basis, brackets; indices 1-based.
inline OrderedJson algebra_to_json(const LieAlgebra& a)
{
    OrderedJson j;
    j["schema_version"] = kSchemaVersion;
    j["dim"] = a.dim();
    j["basis"] = a.labels();
    OrderedJson brackets = OrderedJson::array();
    for (const auto& [key, value] : a.brackets()) {
        OrderedJson b;
        b["i"] = key.first + 1;
        b["j"] = key.second + 1;
        OrderedJson out = OrderedJson::array();
        for (const auto& t : value) {
            OrderedJson term;
            term["k"] = t.index + 1;
            term["c"] = t.value.to_string();
            out.push_back(std::move(term));
        }
        b["out"] = std::move(out);
        brackets.push_back(std::move(b));
    }
    j["brackets"] = std::move(brackets);
    return j;
}

inline std::string serialize_algebra(const LieAlgebra& a) { return algebra_to_json(a).dump(2) + "\n"; }

namespace detail {

inline void require_keys(const OrderedJson& obj, const std::string& where, const std::set<std::string>& required)
{
    if (!obj.is_object())
        throw ParseError(where + ": expected an object");
    for (const auto& [key, value] : obj.items())
        if (!required.count(key))
            throw ParseError(where + ": unknown field '" + key + "'");
    for (const auto& key : required)
        if (!obj.contains(key))
            throw ParseError(where + ": missing field '" + key + "'");
}

inline std::size_t index_field(const OrderedJson& v, const std::string& where, std::size_t dim)
{
    if (!v.is_number_integer())
        throw ParseError(where + ": expected an integer");
    auto x = v.get<long long>();
    if (x < 1 || static_cast<std::size_t>(x) > dim)
        throw ParseError(where + ": index " + std::to_string(x) + " outside 1.." + std::to_string(dim));
    return static_cast<std::size_t>(x - 1);
}

} // namespace detail

/// Parses an algebra document; structural errors throw ParseError with a JSON path.
/// Jacobi is not checked here (see validate).
inline LieAlgebra algebra_from_json(const OrderedJson& j)
{
    detail::require_keys(j, "$", {"schema_version", "dim", "basis", "brackets"});
    if (!j["schema_version"].is_string() || j["schema_version"].get<std::string>() != kSchemaVersion)
        throw ParseError("$.schema_version: expected \"" + std::string(kSchemaVersion) + "\"");
    if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
        throw ParseError("$.dim: expected a positive integer");
    const auto dim = static_cast<std::size_t>(j["dim"].get<long long>());
    if (dim > kMaxDim)
        throw ParseError("$.dim: dimension above " + std::to_string(kMaxDim) + " is not supported");
    if (!j["basis"].is_array() || j["basis"].size() != dim)
        throw ParseError("$.basis: expected " + std::to_string(dim) + " labels");
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < dim; ++i) {
        if (!j["basis"][i].is_string())
            throw ParseError("$.basis[" + std::to_string(i) + "]: expected a string");
        labels.push_back(j["basis"][i].get<std::string>());
    }
    if (!j["brackets"].is_array())
        throw ParseError("$.brackets: expected an array");
    LieAlgebra a(std::move(labels));
    std::set<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t n = 0; n < j["brackets"].size(); ++n) {
        const auto& b = j["brackets"][n];
        const std::string where = "$.brackets[" + std::to_string(n) + "]";
        detail::require_keys(b, where, {"i", "j", "out"});
        std::size_t i = detail::index_field(b["i"], where + ".i", dim);
        std::size_t jj = detail::index_field(b["j"], where + ".j", dim);
        if (i >= jj)
            throw ParseError(where + ": requires i < j");
        if (!seen.insert({i, jj}).second)
            throw ParseError(where + ": duplicate bracket (" + std::to_string(i + 1) + "," + std::to_string(jj + 1) + ")");
        if (!b["out"].is_array())
            throw ParseError(where + ".out: expected an array");
        std::vector<std::pair<std::size_t, Rational>> pairs;
        std::set<std::size_t> ks;
        for (std::size_t t = 0; t < b["out"].size(); ++t) {
            const auto& term = b["out"][t];
            const std::string tw = where + ".out[" + std::to_string(t) + "]";
            detail::require_keys(term, tw, {"k", "c"});
            std::size_t k = detail::index_field(term["k"], tw + ".k", dim);
            if (!ks.insert(k).second)
                throw ParseError(tw + ".k: repeated output index " + std::to_string(k + 1));
            if (!term["c"].is_string())
                throw ParseError(tw + ".c: expected a rational string such as \"3/2\"");
            const auto text = term["c"].get<std::string>();
            Rational c;
            try {
                c = Rational::parse(text);
            } catch (const std::exception& e) {
                throw ParseError(tw + ".c: " + e.what());
            }
            if (c.to_string() != text)
                throw ParseError(tw + ".c: '" + text + "' is not in canonical form (expected '" + c.to_string() + "')");
            pairs.emplace_back(k, c);
        }
        a.set_bracket(i, jj, vec::from_pairs(std::move(pairs)));
    }
    return a;
}

inline LieAlgebra parse_algebra(const std::string& text)
{
    OrderedJson j;
    try {
        j = OrderedJson::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return algebra_from_json(j);
}

inline std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline LieAlgebra load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

/// Graph document {"vertices": n, "edges": [[u, v], ...]} with 1-based vertices.
inline Graph graph_from_json(const OrderedJson& j)
{
    detail::require_keys(j, "$", {"vertices", "edges"});
    if (!j["vertices"].is_number_integer() || j["vertices"].get<long long>() < 1)
        throw ParseError("$.vertices: expected a positive integer");
    Graph g;
    g.vertex_count = static_cast<std::size_t>(j["vertices"].get<long long>());
    if (!j["edges"].is_array())
        throw ParseError("$.edges: expected an array");
    for (std::size_t n = 0; n < j["edges"].size(); ++n) {
        const auto& e = j["edges"][n];
        const std::string where = "$.edges[" + std::to_string(n) + "]";
        if (!e.is_array() || e.size() != 2)
            throw ParseError(where + ": expected a pair of vertices");
        std::size_t u = detail::index_field(e[0], where + "[0]", g.vertex_count);
        std::size_t v = detail::index_field(e[1], where + "[1]", g.vertex_count);
        try {
            g.add_edge(u, v);
        } catch (const InvalidArgument& err) {
            throw ParseError(where + ": " + err.what());
        }
    }
    return g;
}

inline Graph parse_graph(const std::string& text)
{
    try {
        return graph_from_json(OrderedJson::parse(text));
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace nilpo
