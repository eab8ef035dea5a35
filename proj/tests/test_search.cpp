#include <doctest.h>

#include <map>
#include <random>

#include "sperner/io.hpp"
#include "sperner/search.hpp"
#include "oracles.hpp"

using namespace sperner;

namespace {

SearchBudget quick_budget() {
    SearchBudget b;
    b.deterministic = true;
    return b;
}

bool witnesses_ok_trace(const SearchResult& r, int l, int k) {
    for (const SetFamily& w : r.witnesses) {
        if (w.size() != r.best_size) return false;
        if (!oracles::is_trace_sperner(w, l, k)) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("symmetric chain partition") {
    for (int n = 1; n <= 10; ++n) {
        std::vector<int> ids = scd_chain_ids(n);
        std::map<int, std::vector<Mask>> chains;
        for (Mask m = 0; m < (Mask{1} << n); ++m) chains[ids[m]].push_back(m);
        CHECK(chains.size() == central_binomial(n));
        for (auto& [id, members] : chains) {
            std::sort(members.begin(), members.end(),
                      [](Mask a, Mask b) { return canonical_less(a, b); });
            int lo = popcount(members.front());
            int hi = popcount(members.back());
            CHECK(lo + hi == n);                            // symmetric around n/2
            CHECK(hi - lo + 1 == (int)members.size());      // saturated: consecutive sizes
            for (std::size_t i = 0; i + 1 < members.size(); ++i) {
                CHECK(proper_subset_of(members[i], members[i + 1]));
                CHECK(popcount(members[i + 1]) == popcount(members[i]) + 1);
            }
        }
    }
}

TEST_CASE("max trace-Sperner families") {
    SearchBudget b = quick_budget();

    SUBCASE("two sets always collide on some window at k=1") {
        SearchResult r = max_trace_sperner(TraceProblem(Ground(2), 1, 1), b);
        CHECK(r.best_size == 1);
        CHECK(r.status == SearchStatus::proven_optimal);
        CHECK(witnesses_ok_trace(r, 1, 1));
    }
    SUBCASE("depth beyond the longest possible chain allows everything") {
        SearchResult r = max_trace_sperner(TraceProblem(Ground(4), 4, 5), b);
        CHECK(r.best_size == 16);
        CHECK(r.status == SearchStatus::proven_optimal);
    }
    SUBCASE("exact value at n=4, k=2, l=3") {
        SearchResult r = max_trace_sperner(TraceProblem(Ground(4), 3, 2), b);
        CHECK(r.best_size == 6);  // equals the exhaustive enumeration over 2^16 families
        CHECK(r.status == SearchStatus::proven_optimal);
        CHECK(r.best_size >= midband(Ground(4), 2, 1).size());
        CHECK(witnesses_ok_trace(r, 3, 2));
    }
    SUBCASE("exhaustive oracle agreement at n<=3, with and without symmetry pruning") {
        for (int n = 1; n <= 3; ++n) {
            for (int k = 1; k <= 3; ++k) {
                for (int l = 1; l <= n; ++l) {
                    auto pred = [&](const std::vector<Mask>& fam) {
                        return oracles::is_trace_sperner(SetFamily(Ground(n), fam), l, k);
                    };
                    std::uint64_t want = oracles::max_family_size(n, pred);
                    SearchBudget plain = b;
                    plain.symmetry_reduction = false;
                    CHECK(max_trace_sperner(TraceProblem(Ground(n), l, k), b).best_size == want);
                    CHECK(max_trace_sperner(TraceProblem(Ground(n), l, k), plain).best_size == want);
                }
            }
        }
    }
    SUBCASE("monotone in k and in n") {
        std::uint64_t prev = 0;
        for (int k = 1; k <= 4; ++k) {
            SearchResult r = max_trace_sperner(TraceProblem(Ground(4), 3, k), b);
            REQUIRE(r.status == SearchStatus::proven_optimal);
            CHECK(r.best_size >= prev);
            prev = r.best_size;
        }
        prev = 0;
        for (int n = 2; n <= 5; ++n) {
            SearchResult r = max_trace_sperner(TraceProblem::co(Ground(n), 1, 2), b);
            REQUIRE(r.status == SearchStatus::proven_optimal);
            CHECK(r.best_size >= prev);
            prev = r.best_size;
        }
    }
    SUBCASE("budget exhaustion degrades to a bound, never throws") {
        SearchBudget tiny = quick_budget();
        tiny.max_nodes = 4;
        SearchResult r = max_trace_sperner(TraceProblem::co(Ground(6), 1, 2), tiny);
        CHECK(r.status == SearchStatus::lower_bound_only);
        CHECK(r.best_size >= midband(Ground(6), 2, 1).size());
        CHECK(witnesses_ok_trace(r, 5, 2));
    }
}

TEST_CASE("max P-free families") {
    SearchBudget b = quick_budget();

    SUBCASE("named small values") {
        CHECK(max_p_free(Ground(4), build_chain_poset(2), b).best_size == 6);
        CHECK(max_p_free(Ground(3), build_chain_poset(3), b).best_size == 6);
        SearchResult r = max_p_free(Ground(4), build_complete_tree_poset(2, 2), b);
        CHECK(r.best_size == 7);  // exhaustive enumeration over 2^16 families
        CHECK(r.status == SearchStatus::proven_optimal);
    }
    SUBCASE("witnesses are P-free and extremal") {
        TreePoset p = build_complete_tree_poset(2, 2);
        SearchResult r = max_p_free(Ground(4), p, b);
        for (const SetFamily& w : r.witnesses) {
            CHECK(w.size() == r.best_size);
            CHECK(!oracles::contains_poset(w, p));
        }
    }
    SUBCASE("chains match the largest-binomial sum for n<=4") {
        for (int n = 1; n <= 4; ++n) {
            for (int m = 1; m <= n; ++m) {
                std::uint64_t want = 0;
                for (int i = 1; i <= m; ++i) want += binomial(n, (n - m) / 2 + i);
                SearchResult r = max_p_free(Ground(n), build_chain_poset(m + 1), b);
                CHECK(r.best_size == want);
                CHECK(r.status == SearchStatus::proven_optimal);
            }
        }
    }
    SUBCASE("exhaustive oracle agreement at n<=3 for trees up to 4 nodes") {
        std::vector<std::vector<int>> parent_sets = {
            {-1}, {-1, 0}, {-1, 0, 0}, {-1, 0, 1}, {-1, 0, 0, 0}, {-1, 0, 0, 1}, {-1, 0, 1, 2}};
        for (int n = 2; n <= 3; ++n) {
            for (const auto& parents : parent_sets) {
                TreePoset p(parents);
                auto pred = [&](const std::vector<Mask>& fam) {
                    return !oracles::contains_poset(SetFamily(Ground(n), fam), p);
                };
                std::uint64_t want = oracles::max_family_size(n, pred);
                CHECK(max_p_free(Ground(n), p, b).best_size == want);
            }
        }
    }
    SUBCASE("single-node poset forces the empty family") {
        SearchResult r = max_p_free(Ground(3), build_chain_poset(1), b);
        CHECK(r.best_size == 0);
        REQUIRE(r.witnesses.size() == 1);
        CHECK(r.witnesses[0].empty());
    }
    SUBCASE("posets taller than any chain in the lattice forbid nothing") {
        SearchResult r = max_p_free(Ground(3), build_chain_poset(5), b);
        CHECK(r.best_size == 8);
    }
}

TEST_CASE("deterministic mode is thread-count independent") {
    for (int threads : {1, 2, 8}) {
        SearchBudget b = quick_budget();
        b.threads = threads;
        SearchResult r = max_trace_sperner(TraceProblem::co(Ground(4), 1, 2), b);
        CHECK(r.best_size == 6);
        CHECK(r.nodes_explored == 85);  // pinned: any drift breaks byte-stable documents
        CHECK(r.elapsed_seconds == 0.0);
        REQUIRE(!r.witnesses.empty());
        CHECK(write_family(r.witnesses[0]) == "n=4\n1,2\n1,3\n2,3\n1,4\n2,4\n3,4\n");
    }
}

TEST_CASE("heuristic lower bounds") {
    SearchBudget b = quick_budget();

    SUBCASE("never below the band construction") {
        for (int n = 4; n <= 9; ++n) {
            for (int k = 2; k <= 3; ++k) {
                for (int lp = 1; lp < k; ++lp) {
                    SearchResult r = heuristic_lower_bound(TraceProblem::co(Ground(n), lp, k), b);
                    CHECK(r.status == SearchStatus::lower_bound_only);
                    CHECK(r.best_size >= midband(Ground(n), k, lp).size());
                    REQUIRE(!r.witnesses.empty());
                    CHECK(oracles::is_trace_sperner(r.witnesses[0], n - lp, k));
                }
            }
        }
    }
    SUBCASE("matches the exact optimum on a tiny instance") {
        CHECK(heuristic_lower_bound(TraceProblem(Ground(2), 1, 1), b).best_size == 1);
    }
    SUBCASE("same seed, same witness") {
        SearchBudget s1;
        s1.seed = 99;
        SearchBudget s2;
        s2.seed = 99;
        SearchResult a = heuristic_lower_bound(TraceProblem::co(Ground(7), 1, 2), s1);
        SearchResult c = heuristic_lower_bound(TraceProblem::co(Ground(7), 1, 2), s2);
        CHECK(a.best_size == c.best_size);
        REQUIRE(!a.witnesses.empty());
        REQUIRE(!c.witnesses.empty());
        CHECK(a.witnesses[0] == c.witnesses[0]);
    }
}

TEST_CASE("inequality check between the two maximizers") {
    SearchBudget b = quick_budget();
    for (int n : {3, 4}) {
        DecompositionReport rep = check_decomposition_inequality(Ground(n), 2, 1, b);
        CHECK(rep.conclusive);
        CHECK(rep.slack >= 0);
        CHECK(rep.lhs.best_size <= rep.base.best_size + rep.la.best_size);
    }
    CHECK_THROWS_AS(check_decomposition_inequality(Ground(4), 2, 2, b), RangeError);
    CHECK_THROWS_AS(check_decomposition_inequality(Ground(4), 1, 2, b), RangeError);
}

TEST_CASE("largest families with pairwise-disjoint shadows") {
    SearchBudget b = quick_budget();

    SUBCASE("matches plain enumeration over level subfamilies") {
        for (int n = 2; n <= 5; ++n) {
            for (int i = 2; i <= n; ++i) {
                std::vector<Mask> lvl = level(Ground(n), i).members();
                std::uint64_t want = 0;
                for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << lvl.size()); ++pick) {
                    std::vector<Mask> fam;
                    for (std::size_t j = 0; j < lvl.size(); ++j)
                        if ((pick >> j) & 1u) fam.push_back(lvl[j]);
                    bool ok = true;
                    for (std::size_t x = 0; x < fam.size() && ok; ++x)
                        for (std::size_t y = x + 1; y < fam.size() && ok; ++y)
                            ok = popcount(fam[x] & fam[y]) != i - 1;
                    if (ok) want = std::max<std::uint64_t>(want, fam.size());
                }
                SearchResult r = max_disjoint_shadow_family(Ground(n), i, b);
                CHECK(r.best_size == want);
                CHECK(r.status == SearchStatus::proven_optimal);
            }
        }
    }
    SUBCASE("frozen milestones") {
        CHECK(max_disjoint_shadow_family(Ground(6), 3, b).best_size == 4);
        CHECK(max_disjoint_shadow_family(Ground(8), 4, b).best_size == 14);
    }
}
