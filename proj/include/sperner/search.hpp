#ifndef SPERNER_SEARCH_HPP
#define SPERNER_SEARCH_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "sperner/constructions.hpp"
#include "sperner/family.hpp"
#include "sperner/poset.hpp"

namespace sperner {

// Resource limits and engine knobs shared by all exact searches.
//
// In deterministic mode the search result (best size, status, witnesses, node
// count) is independent of the thread count: the tree is split at a fixed
// frontier depth, subtrees do not share incumbents, node budgets are allotted
// per subtree, and the wall-clock budget is ignored (wall-clock cutoffs are
// schedule-dependent). Fast mode shares the incumbent and node counter across
// workers and honors max_seconds.
struct SearchBudget {
    double max_seconds = 60.0;
    long long max_nodes = 200000000;
    int threads = 1;
    bool deterministic = false;
    std::uint64_t seed = 12345;
    bool symmetry_reduction = true;  // transposition lex-leader pruning
    int frontier_depth = 3;
    int witness_cap = 4;
    std::ostream* log = nullptr;  // one line per improved incumbent

    void validate() const;
};

enum class SearchStatus { proven_optimal, lower_bound_only };

const char* to_string(SearchStatus s);

struct SearchResult {
    std::uint64_t best_size = 0;
    std::vector<SetFamily> witnesses;  // up to witness_cap families of best_size
    SearchStatus status = SearchStatus::lower_bound_only;
    long long nodes_explored = 0;
    double elapsed_seconds = 0.0;  // 0 in deterministic mode
};

// Maximum size of a family whose every l-window trace is k-Sperner, by
// branch-and-bound over all candidate subsets in canonical order, seeded with
// the best applicable construction. Budget exhaustion (or a ground set too
// large to enumerate) degrades the status to lower_bound_only, never throws.
SearchResult max_trace_sperner(const TraceProblem& problem, const SearchBudget& budget);

// Maximum size of a P-free family over [n]; same search skeleton with
// incremental embedding tests.
SearchResult max_p_free(Ground ground, const TreePoset& poset, const SearchBudget& budget);

// Local search (add passes plus remove-and-refill kicks) around the best
// applicable construction; status is always lower_bound_only. Runs with the
// same seed reproduce the same witness.
SearchResult heuristic_lower_bound(const TraceProblem& problem, const SearchBudget& budget);

// Largest subfamily of the full level of i-sets whose members have pairwise
// disjoint shadows (equivalently: no two members share i-1 elements).
SearchResult max_disjoint_shadow_family(Ground ground, int i, const SearchBudget& budget);

// The root-peeling decomposition bound: f(n,k,n-lp) never exceeds
// f(n,lp,n-lp) + La(n, complete tree of height k-lp+1 and branching 2^lp).
// All three terms are computed exactly and the slack is reported. Throws
// std::logic_error if the inequality fails with all terms proven (that would
// be an implementation bug, not a mathematical possibility).
struct DecompositionReport {
    int n = 0, k = 0, lp = 0;
    SearchResult lhs;       // f(n, k, n-lp)
    SearchResult base;      // f(n, lp, n-lp)
    SearchResult la;        // La(n, P_{k-lp+1, 2^lp})
    bool conclusive = false;
    long long slack = 0;    // rhs - lhs when conclusive
};
DecompositionReport check_decomposition_inequality(Ground ground, int k, int lp,
                                                   const SearchBudget& budget);

// Partition of all 2^n masks into symmetric saturated chains (n <= 24);
// returns for each mask the id of its chain. Chains are nested, consecutive
// in cardinality, and centered on n/2, which makes "at most c members per
// chain" a sound search bound.
std::vector<int> scd_chain_ids(int n);

}  // namespace sperner

#endif
