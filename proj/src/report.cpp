#include "sperner/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "sperner/io.hpp"

namespace sperner {

namespace {

std::string fixed6(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", x);
    return buf;
}

double rounded_elapsed(const SearchResult& r) {
    return std::round(r.elapsed_seconds * 1000.0) / 1000.0;
}

}  // namespace

Json trace_problem_json(const TraceProblem& problem) {
    Json j;
    j["type"] = "trace-sperner";
    j["n"] = problem.ground.n();
    j["k"] = problem.k;
    j["l"] = problem.l;
    j["lp"] = problem.lp();
    return j;
}

Json poset_problem_json(Ground ground, const TreePoset& poset) {
    Json j;
    j["type"] = "p-free";
    j["n"] = ground.n();
    Json p;
    p["nodes"] = poset.node_count();
    p["parents"] = poset.parents();
    p["height"] = poset.height();
    j["poset"] = std::move(p);
    return j;
}

Json engine_config_json(const SearchBudget& budget) {
    Json j;
    j["deterministic"] = budget.deterministic;
    j["seed"] = budget.seed;
    j["symmetry_reduction"] = budget.symmetry_reduction;
    j["frontier_depth"] = budget.frontier_depth;
    j["witness_cap"] = budget.witness_cap;
    j["max_nodes"] = budget.max_nodes;
    return j;
}

Json search_result_json(Json problem, const SearchResult& result, const SearchBudget& budget) {
    Json j;
    j["problem"] = std::move(problem);
    j["best_size"] = result.best_size;
    j["status"] = to_string(result.status);
    Json witnesses = Json::array();
    for (const SetFamily& w : result.witnesses) witnesses.push_back(write_family(w));
    j["witnesses"] = std::move(witnesses);
    j["nodes_explored"] = result.nodes_explored;
    j["elapsed_seconds"] = rounded_elapsed(result);
    j["engine_config"] = engine_config_json(budget);
    return j;
}

std::string search_result_csv(const TraceProblem& problem, const SearchResult& result) {
    std::ostringstream out;
    out << "n,k,l,lp,best_size,status,nodes_explored,elapsed_seconds\n";
    out << problem.ground.n() << ',' << problem.k << ',' << problem.l << ',' << problem.lp()
        << ',' << result.best_size << ',' << to_string(result.status) << ','
        << result.nodes_explored << ',' << fixed6(rounded_elapsed(result)) << '\n';
    return out.str();
}

std::string search_result_csv(Ground ground, const TreePoset& poset,
                              const SearchResult& result) {
    std::ostringstream out;
    out << "n,poset_nodes,best_size,status,nodes_explored,elapsed_seconds\n";
    out << ground.n() << ',' << poset.node_count() << ',' << result.best_size << ','
        << to_string(result.status) << ',' << result.nodes_explored << ','
        << fixed6(rounded_elapsed(result)) << '\n';
    return out.str();
}

std::string search_result_text(const SearchResult& result) {
    std::ostringstream out;
    out << "best_size: " << result.best_size << "\n";
    out << "status: " << to_string(result.status) << "\n";
    out << "nodes_explored: " << result.nodes_explored << "\n";
    out << "elapsed_seconds: " << fixed6(rounded_elapsed(result)) << "\n";
    for (std::size_t i = 0; i < result.witnesses.size(); ++i) {
        out << "witness " << i + 1 << ":\n" << write_family(result.witnesses[i]);
    }
    return out.str();
}

std::uint64_t conjecture1_rhs_value(int n, int k, int lp) {
    if (lp >= k) return 0;
    std::uint64_t sum = 0;
    for (int i = 1; i <= k - lp; ++i) {
        int idx = (n - (k - lp)) / 2 + i;
        if (idx < 0 || idx > n) continue;
        sum += binomial(n, idx);
    }
    return sum;
}

std::vector<ReportRow> conjecture_table(int n_max, int k_max, const SearchBudget& budget) {
    if (n_max < 1 || k_max < 1) throw RangeError("conjecture_table: bounds must be >= 1");
    std::vector<ReportRow> rows;
    for (int n = 2; n <= n_max; ++n) {
        Ground g(n);
        double central = (double)central_binomial(n);
        for (int k = 1; k <= k_max; ++k) {
            for (int lp = 1; lp <= std::min(n - 1, k_max); ++lp) {
                ReportRow row;
                row.n = n;
                row.k = k;
                row.lp = lp;
                TraceProblem problem = TraceProblem::co(g, lp, k);
                SearchResult res = max_trace_sperner(problem, budget);
                row.best_size = res.best_size;
                row.status = to_string(res.status);
                if (res.status == SearchStatus::proven_optimal) row.exact_f = res.best_size;
                row.ratio_to_central_binomial = fixed6((double)res.best_size / central);
                if (lp < k) {
                    row.conjecture1_rhs = conjecture1_rhs_value(n, k, lp);
                    row.midband_size = midband(g, k, lp).size();
                } else {
                    row.conjecture3_normalized =
                        fixed6(std::pow((double)n, lp - k + 1) * (double)res.best_size / central);
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

namespace {

std::string opt_to_string(const std::optional<std::uint64_t>& v) {
    return v ? std::to_string(*v) : std::string();
}

std::string zero_blank(std::uint64_t v) { return v == 0 ? std::string() : std::to_string(v); }

}  // namespace

std::string report_rows_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    out << "n,k,lp,exact_f,status,conjecture1_rhs,midband_size,"
           "ratio_to_central_binomial,conjecture3_normalized\n";
    for (const ReportRow& r : rows) {
        out << r.n << ',' << r.k << ',' << r.lp << ',' << opt_to_string(r.exact_f) << ','
            << r.status << ',' << zero_blank(r.conjecture1_rhs) << ','
            << zero_blank(r.midband_size) << ',' << r.ratio_to_central_binomial << ','
            << r.conjecture3_normalized << '\n';
    }
    return out.str();
}

Json report_rows_json(const std::vector<ReportRow>& rows) {
    Json arr = Json::array();
    for (const ReportRow& r : rows) {
        Json j;
        j["n"] = r.n;
        j["k"] = r.k;
        j["lp"] = r.lp;
        if (r.exact_f) j["exact_f"] = *r.exact_f;
        else j["exact_f"] = nullptr;
        j["status"] = r.status;
        j["best_size"] = r.best_size;
        if (r.lp < r.k) {
            j["conjecture1_rhs"] = r.conjecture1_rhs;
            j["midband_size"] = r.midband_size;
        } else {
            j["conjecture1_rhs"] = nullptr;
            j["midband_size"] = nullptr;
        }
        j["ratio_to_central_binomial"] = r.ratio_to_central_binomial;
        if (!r.conjecture3_normalized.empty())
            j["conjecture3_normalized"] = r.conjecture3_normalized;
        else
            j["conjecture3_normalized"] = nullptr;
        arr.push_back(std::move(j));
    }
    return arr;
}

std::string report_rows_text(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    out << "  n  k lp     f(n,k,n-lp)  status            conj1_rhs  midband    "
           "f/C(n,n/2)  conj3_norm\n";
    for (const ReportRow& r : rows) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%3d %2d %2d %15llu  %-17s %9s  %8s  %10s  %10s\n",
                      r.n, r.k, r.lp, (unsigned long long)r.best_size, r.status.c_str(),
                      zero_blank(r.conjecture1_rhs).c_str(), zero_blank(r.midband_size).c_str(),
                      r.ratio_to_central_binomial.c_str(), r.conjecture3_normalized.c_str());
        out << buf;
    }
    return out.str();
}

}  // namespace sperner
