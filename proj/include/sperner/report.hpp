#ifndef SPERNER_REPORT_HPP
#define SPERNER_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sperner/search.hpp"

namespace sperner {

using Json = nlohmann::ordered_json;

// Result documents. JSON is the canonical format and is byte-stable in
// deterministic mode: elapsed time is reported as 0 and the engine-config
// block carries no wall-clock or thread fields.
Json trace_problem_json(const TraceProblem& problem);
Json poset_problem_json(Ground ground, const TreePoset& poset);
Json engine_config_json(const SearchBudget& budget);
Json search_result_json(Json problem, const SearchResult& result, const SearchBudget& budget);

// CSV projection of a search document (no witnesses). Columns:
// n,k,l,lp,best_size,status,nodes_explored,elapsed_seconds
std::string search_result_csv(const TraceProblem& problem, const SearchResult& result);
// Columns: n,poset_nodes,best_size,status,nodes_explored,elapsed_seconds
std::string search_result_csv(Ground ground, const TreePoset& poset, const SearchResult& result);

std::string search_result_text(const SearchResult& result);

// One row of the conjecture survey for a parameter triple (n, k, lp).
// For lp < k the first-conjecture right-hand side and the midband size are
// defined; for k <= lp the table instead reports the normalized value
// n^(lp-k+1) * f / C(n, n/2). Nothing is asserted; slack is data.
struct ReportRow {
    int n = 0, k = 0, lp = 0;
    std::optional<std::uint64_t> exact_f;  // present only when proven optimal
    std::uint64_t best_size = 0;           // exact or best known lower bound
    std::string status;
    std::uint64_t conjecture1_rhs = 0;     // 0 when k <= lp
    std::uint64_t midband_size = 0;        // 0 when k <= lp
    std::string ratio_to_central_binomial;
    std::string conjecture3_normalized;    // empty when lp < k
};

std::vector<ReportRow> conjecture_table(int n_max, int k_max, const SearchBudget& budget);

// Fixed column order:
// n,k,lp,exact_f,status,conjecture1_rhs,midband_size,
// ratio_to_central_binomial,conjecture3_normalized
std::string report_rows_csv(const std::vector<ReportRow>& rows);
Json report_rows_json(const std::vector<ReportRow>& rows);
std::string report_rows_text(const std::vector<ReportRow>& rows);

std::uint64_t conjecture1_rhs_value(int n, int k, int lp);

}  // namespace sperner

#endif
