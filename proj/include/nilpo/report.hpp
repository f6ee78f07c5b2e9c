#pragma once

#include "nilpo/cohomology.hpp"
#include "nilpo/io.hpp"
#include "nilpo/liealg.hpp"
#include "nilpo/parallel.hpp"
#include "nilpo/rootsys.hpp"
#include "nilpo/symplectic.hpp"

#include <chrono>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace nilpo {

struct AnalysisOptions {
    WitnessOptions witness;
    bool e_table = false;
};

struct AnalysisReport {
    std::size_t dim = 0;
    std::vector<std::string> labels;
    std::size_t nilpotency_index = 0;
    std::vector<std::size_t> series_dims;
    std::size_t center_dim = 0;
    std::vector<std::size_t> betti;
    std::size_t e02 = 0;
    std::optional<EInftyTable> table;
    bool obstruction_vanishes = false;
    SymplecticVerdict verdict;
    double seconds = 0;
};

/// Full pipeline: series, Betti numbers, E_∞^{0,2}, optional table, verdict.
/// Throws on invalid input and on failed internal consistency checks.
inline AnalysisReport analyze(const LieAlgebra& a, const AnalysisOptions& options = {})
{
    auto start = std::chrono::steady_clock::now();
    auto violations = validate(a);
    if (!violations.empty())
        throw InvalidArgument(violations.front().message);
    AnalysisReport r;
    r.dim = a.dim();
    r.labels = a.labels();
    SeriesReport s = lower_central_series(a);
    r.nilpotency_index = s.nilpotency_index;
    r.series_dims = s.dims();
    r.center_dim = s.center.dim();
    r.betti = betti_numbers(a);
    long euler = 0;
    for (std::size_t i = 0; i < r.betti.size(); ++i)
        euler += (i % 2 ? -1 : 1) * static_cast<long>(r.betti[i]);
    if (euler != 0)
        throw InternalError("Euler characteristic of a nilpotent algebra must vanish");
    if (r.betti.size() > 1 && r.betti[1] != a.dim() - s.ideals[1].dim())
        throw InternalError("b1 differs from dim n - dim [n,n]");
    r.e02 = e_infty_dim(a, 0, 2);
    if (a.dim() >= 2 && r.e02 > r.betti[2])
        throw InternalError("E_infinity^{0,2} exceeds b2");
    if (options.e_table) {
        r.table = e_infty_table(a);
        if (r.table->betti != r.betti)
            throw DecompositionMismatch("table Betti numbers disagree with the analysis");
        if (r.table->at(0, 2) != r.e02)
            throw DecompositionMismatch("graded and quotient computations of E_infinity^{0,2} disagree");
    }
    r.obstruction_vanishes = r.e02 == 0;
    r.verdict = decide(a, options.witness);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

inline OrderedJson verdict_to_json(const SymplecticVerdict& v)
{
    OrderedJson j;
    j["status"] = v.status_name();
    switch (v.status) {
    case SymplecticVerdict::Status::Symplectic: {
        j["witness"] = v.witness->to_string();
        OrderedJson terms = OrderedJson::array();
        for (const auto& [m, c] : v.witness->terms()) {
            auto idx = mono::indices(m);
            terms.push_back({{"i", idx[0] + 1}, {"j", idx[1] + 1}, {"c", c.to_string()}});
        }
        j["witness_terms"] = std::move(terms);
        break;
    }
    case SymplecticVerdict::Status::CertifiedNonSymplectic: j["reason"] = v.reason_name(); break;
    case SymplecticVerdict::Status::Inconclusive:
        j["samples"] = v.samples;
        j["degree_bound"] = v.degree_bound;
        j["sample_space_size"] = v.sample_space_size;
        j["failure_bound"] = v.failure_bound.to_string();
        j["failure_bound_approx"] = v.failure_bound.to_double();
        break;
    }
    return j;
}

inline OrderedJson report_to_json(const AnalysisReport& r, bool timing = true)
{
    OrderedJson j;
    j["schema_version"] = kSchemaVersion;
    j["algebra"] = {{"dim", r.dim}, {"basis", r.labels}, {"nilpotency_index", r.nilpotency_index}, {"series_dims", r.series_dims},
                    {"center_dim", r.center_dim}};
    j["betti"] = r.betti;
    j["e_infinity_02"] = r.e02;
    if (r.table) {
        OrderedJson cells = OrderedJson::array();
        for (const auto& [pq, n] : r.table->dims)
            cells.push_back({{"p", pq.first}, {"q", pq.second}, {"dim", n}});
        j["e_infinity_table"] = std::move(cells);
    }
    j["obstruction_vanishes"] = r.obstruction_vanishes;
    j["verdict"] = verdict_to_json(r.verdict);
    if (timing)
        j["timing"] = {{"seconds", r.seconds}};
    return j;
}

inline std::string join(const std::vector<std::size_t>& v, const char* sep = " ")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

inline std::string report_to_text(const AnalysisReport& r)
{
    std::ostringstream out;
    out << "dimension          " << r.dim << "\n";
    out << "nilpotency index   " << r.nilpotency_index << "\n";
    out << "series dims        " << join(r.series_dims) << "\n";
    out << "center dim         " << r.center_dim << "\n";
    out << "betti              " << join(r.betti) << "\n";
    out << "E_inf^{0,2}        " << r.e02 << (r.obstruction_vanishes ? "  (obstruction vanishes)" : "") << "\n";
    if (r.table) {
        out << "E_inf table (rows p, columns p+q):\n";
        for (long p = 0; p < static_cast<long>(r.table->nilpotency_index); ++p) {
            out << "  p=" << std::setw(2) << p << " ";
            for (long i = 0; i <= static_cast<long>(r.table->max_degree); ++i)
                out << std::setw(5) << r.table->at(p, i - p);
            out << "\n";
        }
    }
    out << "verdict            " << r.verdict.status_name();
    if (r.verdict.status == SymplecticVerdict::Status::Symplectic)
        out << "\nwitness            " << r.verdict.witness->to_string();
    else if (r.verdict.status == SymplecticVerdict::Status::CertifiedNonSymplectic)
        out << " (" << r.verdict.reason_name() << ")";
    else
        out << "\nfailure bound      " << r.verdict.failure_bound.to_double() << " (" << r.verdict.samples << " samples)";
    out << "\n";
    return out.str();
}

// ---------------------------------------------------------------------------
// Classification of nilradicals

struct RankRange {
    Family family;
    std::size_t lo, hi;
};

inline std::vector<RankRange> default_ranges()
{
    return {{Family::A, 1, 5}, {Family::B, 2, 4}, {Family::C, 3, 4}, {Family::D, 4, 5}};
}

struct ClassifyRow {
    Family family = Family::A;
    std::size_t rank = 0;
    std::size_t dim = 0;
    std::size_t k = 0;
    std::size_t e02 = 0;
    std::size_t extension_dim = 0;
    SymplecticVerdict verdict;

    std::string name() const { return std::string(1, family_letter(family)) + std::to_string(rank); }
};

struct ClassifyOptions {
    WitnessOptions witness;
    /// Check the antidiagonal sums in every degree instead of degrees <= 2.
    bool full_table = false;
};

/// One row per (family, rank): E_∞^{0,2} of the nilradical and the verdict for
/// its even-dimensional trivial extension. Throws DecompositionMismatch if the
/// limit terms fail to add up to the Betti numbers.
inline ClassifyRow classify_one(Family f, std::size_t n, const ClassifyOptions& options = {})
{
    GradedNilradical g = nilradical(f, n);
    ClassifyRow row;
    row.family = f;
    row.rank = n;
    row.dim = g.algebra.dim();
    row.k = lower_central_series(g.algebra).nilpotency_index;
    row.e02 = e_infty_dim(g.algebra, 0, 2);
    TableOptions t;
    if (!options.full_table)
        t.max_degree = 2;
    EInftyTable table = e_infty_table(g.algebra, t);
    if (table.at(0, 2) != row.e02)
        throw DecompositionMismatch(row.name() + ": graded and quotient computations of E_infinity^{0,2} disagree");
    LieAlgebra ext = trivial_extension(g.algebra, row.dim % 2);
    row.extension_dim = ext.dim();
    row.verdict = decide(ext, options.witness);
    return row;
}

inline std::vector<ClassifyRow> classify(const std::vector<RankRange>& ranges, const ClassifyOptions& options = {})
{
    std::vector<std::pair<Family, std::size_t>> cells;
    for (const auto& r : ranges)
        for (std::size_t n = r.lo; n <= r.hi; ++n)
            cells.emplace_back(r.family, n);
    std::vector<ClassifyRow> rows(cells.size());
    parallel_for(cells.size(), [&](std::size_t i) { rows[i] = classify_one(cells[i].first, cells[i].second, options); });
    return rows;
}

inline std::string classify_to_text(const std::vector<ClassifyRow>& rows)
{
    std::ostringstream out;
    out << "type  dim  k  E02  ext  verdict\n";
    for (const auto& r : rows) {
        out << std::left << std::setw(4) << r.name() << std::right << std::setw(5) << r.dim << std::setw(3) << r.k << std::setw(5) << r.e02
            << std::setw(5) << r.extension_dim << "  " << r.verdict.status_name();
        if (r.verdict.status == SymplecticVerdict::Status::CertifiedNonSymplectic)
            out << "(" << r.verdict.reason_name() << ")";
        out << "\n";
    }
    return out.str();
}

inline OrderedJson classify_to_json(const std::vector<ClassifyRow>& rows)
{
    OrderedJson j;
    j["schema_version"] = kSchemaVersion;
    OrderedJson arr = OrderedJson::array();
    for (const auto& r : rows)
        arr.push_back({{"family", std::string(1, family_letter(r.family))},
                       {"rank", r.rank},
                       {"dim", r.dim},
                       {"k", r.k},
                       {"e_infinity_02", r.e02},
                       {"extension_dim", r.extension_dim},
                       {"verdict", verdict_to_json(r.verdict)}});
    j["rows"] = std::move(arr);
    return j;
}

} // namespace nilpo
