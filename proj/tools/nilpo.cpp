#include "nilpo/nilpo.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <regex>
#include <string>
#include <vector>

namespace {

enum ExitCode { kOk = 0, kInputError = 1, kInternalError = 2 };

bool is_internal(const nilpo::Error& e)
{
    return dynamic_cast<const nilpo::InternalError*>(&e) || dynamic_cast<const nilpo::DecompositionMismatch*>(&e) ||
           dynamic_cast<const nilpo::InternalExpansionFailure*>(&e);
}

nilpo::Graph graph_from_edges(std::size_t vertices, const std::string& edges)
{
    nilpo::Graph g;
    g.vertex_count = vertices;
    std::regex pair(R"((\d+)\s*-\s*(\d+))");
    for (auto it = std::sregex_iterator(edges.begin(), edges.end(), pair); it != std::sregex_iterator(); ++it) {
        std::size_t u = std::stoul((*it)[1]), v = std::stoul((*it)[2]);
        if (u < 1 || v < 1)
            throw nilpo::ParseError("vertices are numbered from 1");
        g.add_edge(u - 1, v - 1);
    }
    return g;
}

std::vector<nilpo::RankRange> parse_ranges(const std::vector<std::string>& specs)
{
    std::vector<nilpo::RankRange> out;
    std::regex form(R"(([ABCDabcd])(\d+)(?:\.\.(\d+))?)");
    for (const auto& s : specs) {
        std::smatch m;
        if (!std::regex_match(s, m, form))
            throw nilpo::ParseError("range '" + s + "' is not of the form A1..5 or B3");
        nilpo::Family f = nilpo::parse_family(m[1]);
        std::size_t lo = std::stoul(m[2]);
        std::size_t hi = m[3].matched ? std::stoul(m[3]) : lo;
        if (lo > hi)
            throw nilpo::ParseError("empty rank range '" + s + "'");
        if (lo < nilpo::min_rank(f))
            throw nilpo::ParseError("range '" + s + "' starts below the minimum rank " + std::to_string(nilpo::min_rank(f)));
        out.push_back({f, lo, hi});
    }
    return out;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Symplectic structures on nilpotent Lie algebras, decided with exact arithmetic"};
    app.require_subcommand(1);

    nilpo::WitnessOptions witness;
    auto add_witness_flags = [&](CLI::App* cmd) {
        cmd->add_option("--seed", witness.seed, "Seed for the witness search")->capture_default_str();
        cmd->add_option("--samples", witness.samples, "Number of random closed 2-forms to try")->capture_default_str();
        cmd->add_option("--bound", witness.bound, "Coefficient range [-B,B]; 0 means max(10^6, dim*samples)")->capture_default_str();
    };

    auto* analyze = app.add_subcommand("analyze", "Analyze an algebra file");
    std::string path;
    bool json = false, e_table = false, no_timing = false;
    analyze->add_option("file", path, "Algebra JSON file")->required();
    analyze->add_flag("--json", json, "Print the report as JSON");
    analyze->add_flag("--e-table", e_table, "Compute the full E_infinity table");
    analyze->add_flag("--no-timing", no_timing, "Omit the timing field from JSON output");
    add_witness_flags(analyze);

    auto* generate = app.add_subcommand("generate", "Write an algebra file to stdout");
    generate->require_subcommand(1);
    std::string output;
    generate->add_option("-o,--output", output, "Write to this file instead of stdout");
    std::size_t dim = 0, gens = 0, cls = 0, rank = 0, vertices = 0;
    std::string family, edges, graph_file;
    auto* g_abelian = generate->add_subcommand("abelian", "Abelian algebra");
    g_abelian->add_option("--dim", dim)->required();
    auto* g_heis = generate->add_subcommand("heisenberg", "Heisenberg algebra of odd dimension");
    g_heis->add_option("--dim", dim)->required();
    auto* g_free = generate->add_subcommand("free", "Free nilpotent algebra of class <= 3");
    g_free->add_option("--gens", gens)->required();
    g_free->add_option("--class", cls)->required();
    auto* g_graph = generate->add_subcommand("graph", "2-step algebra of a graph");
    g_graph->add_option("--file", graph_file, "Graph JSON {\"vertices\": n, \"edges\": [[1,2],...]}");
    g_graph->add_option("--vertices", vertices, "Vertex count for --edges");
    g_graph->add_option("--edges", edges, "Edge list such as \"1-2,2-3\"");
    auto* g_nil = generate->add_subcommand("nilradical", "Positive-root nilradical of a classical type");
    g_nil->add_option("--family", family)->required()->check(CLI::IsMember({"A", "B", "C", "D"}));
    g_nil->add_option("--rank", rank)->required();
    auto* g_six = generate->add_subcommand("example6", "The 6-dimensional 3-step example");

    for (auto* sub : {g_abelian, g_heis, g_free, g_graph, g_nil, g_six})
        sub->fallthrough();

    auto* classify = app.add_subcommand("classify", "Classify nilradicals of classical types");
    std::vector<std::string> ranges;
    bool full_table = false, classify_json = false;
    classify->add_option("--range", ranges, "Family and ranks, e.g. A1..5 (repeatable); default A1..5 B2..4 C3..4 D4..5");
    classify->add_flag("--full-table", full_table, "Check the Betti decomposition in every degree");
    classify->add_flag("--json", classify_json, "Print JSON");
    add_witness_flags(classify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*analyze) {
            nilpo::LieAlgebra a = nilpo::load_algebra(path);
            nilpo::AnalysisOptions options;
            options.witness = witness;
            options.e_table = e_table;
            auto report = nilpo::analyze(a, options);
            if (json)
                std::cout << nilpo::report_to_json(report, !no_timing).dump(2) << "\n";
            else
                std::cout << nilpo::report_to_text(report);
        } else if (*generate) {
            nilpo::LieAlgebra a;
            if (*g_abelian)
                a = nilpo::abelian(dim);
            else if (*g_heis)
                a = nilpo::heisenberg(dim);
            else if (*g_free)
                a = nilpo::free_nilpotent(gens, cls);
            else if (*g_graph) {
                if (!graph_file.empty())
                    a = nilpo::graph_algebra(nilpo::parse_graph(nilpo::read_file(graph_file)));
                else if (vertices > 0)
                    a = nilpo::graph_algebra(graph_from_edges(vertices, edges));
                else
                    throw nilpo::InvalidArgument("graph needs --file or --vertices with --edges");
            } else if (*g_nil)
                a = nilpo::nilradical(nilpo::parse_family(family), rank).algebra;
            else if (*g_six)
                a = nilpo::example_six_dim().algebra;
            std::string text = nilpo::serialize_algebra(a);
            if (output.empty()) {
                std::cout << text;
            } else {
                std::ofstream out(output, std::ios::binary);
                if (!out)
                    throw nilpo::InvalidArgument("cannot write '" + output + "'");
                out << text;
            }
        } else if (*classify) {
            nilpo::ClassifyOptions options;
            options.witness = witness;
            options.full_table = full_table;
            auto rows = nilpo::classify(ranges.empty() ? nilpo::default_ranges() : parse_ranges(ranges), options);
            if (classify_json)
                std::cout << nilpo::classify_to_json(rows).dump(2) << "\n";
            else
                std::cout << nilpo::classify_to_text(rows);
        }
    } catch (const nilpo::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return is_internal(e) ? kInternalError : kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kOk;
}
