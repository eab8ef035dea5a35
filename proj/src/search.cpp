#include "sperner/search.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <climits>
#include <functional>
#include <memory>
#include <mutex>
#include <ostream>
#include <random>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace sperner {

void SearchBudget::validate() const {
    if (max_seconds <= 0) throw RangeError("budget: max_seconds must be positive");
    if (max_nodes <= 0) throw RangeError("budget: max_nodes must be positive");
    if (threads < 1) throw RangeError("budget: threads must be >= 1");
    if (frontier_depth < 1) throw RangeError("budget: frontier_depth must be >= 1");
    if (witness_cap < 1) throw RangeError("budget: witness_cap must be >= 1");
}

const char* to_string(SearchStatus s) {
    return s == SearchStatus::proven_optimal ? "proven-optimal" : "lower-bound-only";
}

std::vector<int> scd_chain_ids(int n) {
    if (n < 1 || n > 24) throw RangeError("scd_chain_ids: n must be in 1..24");
    const std::size_t size = std::size_t{1} << n;
    std::vector<int> id(size);
    std::unordered_map<Mask, int> keys;
    int stack[64];
    for (std::size_t m = 0; m < size; ++m) {
        // Bracket-match the membership word: a set bit opens, a clear bit
        // closes against the most recent unmatched open. Closing every
        // unmatched position yields the minimal member of m's chain, which
        // identifies the chain.
        Mask rep = m;
        int top = 0;
        for (int p = 0; p < n; ++p) {
            if ((m >> p) & 1u) {
                stack[top++] = p;
            } else if (top > 0) {
                --top;
            }
        }
        while (top > 0) rep &= ~(Mask{1} << stack[--top]);
        auto [it, fresh] = keys.try_emplace(rep, (int)keys.size());
        (void)fresh;
        id[m] = it->second;
    }
    return id;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

// ---- feasibility oracles ---------------------------------------------------
//
// An oracle owns the chosen family's incremental state. can_add(m) answers
// whether the current family plus m still satisfies the defining predicate
// (all predicates here are hereditary, so a candidate that fails now fails in
// every extension of the current family).

class IncrementalOracle {
public:
    virtual ~IncrementalOracle() = default;
    virtual bool can_add(Mask m) = 0;
    virtual void push(Mask m) = 0;
    virtual void pop() = 0;
    // Problem-specific cap on how many more sets could ever be added once
    // `chosen` sets are in; LLONG_MAX when no such cap applies.
    virtual long long extra_headroom(int chosen) const {
        (void)chosen;
        return LLONG_MAX;
    }
};

// Per-window chain state for the trace-Sperner predicate. Each window keeps,
// over the compressed 2^l lattice of trace values:
//   max_under[t]: longest chain among present traces that are subsets of t
//   max_over[t]:  longest chain among present traces that are supersets of t
// so a new trace value t would create a chain of exactly
// max_under[t] + max_over[t] + 1 through itself, an O(1) feasibility probe.
class TraceOracle final : public IncrementalOracle {
public:
    explicit TraceOracle(const TraceProblem& p) : k_(p.k) {
        for_each_window(p.ground.n(), p.l, [&](Mask w) {
            Window win;
            win.bits = bit_positions(w);
            win.l = p.l;
            std::size_t size = std::size_t{1} << p.l;
            win.present.assign((size + 63) / 64, 0);
            win.ref.assign(size, 0);
            win.max_under.assign(size, 0);
            win.max_over.assign(size, 0);
            windows_.push_back(std::move(win));
        });
    }

    static bool tractable(const TraceProblem& p, double byte_cap) {
        if (p.l > 22) return false;
        double per_window = 12.0 * (double)(std::size_t{1} << p.l);
        return (double)binomial(p.ground.n(), p.l) * per_window <= byte_cap;
    }

    bool can_add(Mask m) override {
        for (const Window& w : windows_) {
            std::size_t t = compress(w, m);
            if (w.ref[t] > 0) continue;
            if (w.max_under[t] + w.max_over[t] + 1 > k_) return false;
        }
        return true;
    }

    void push(Mask m) override {
        stack_.push_back(m);
        add_member(m);
    }

    void pop() override {
        Mask m = stack_.back();
        stack_.pop_back();
        remove_member(m);
    }

    // Arbitrary-position removal for local search; refcounts keep duplicate
    // trace values straight.
    void add_member(Mask m) {
        for (Window& w : windows_) {
            std::size_t t = compress(w, m);
            if (w.ref[t]++ == 0) {
                w.present[t >> 6] |= std::uint64_t{1} << (t & 63);
                recompute(w);
            }
        }
    }

    void remove_member(Mask m) {
        for (Window& w : windows_) {
            std::size_t t = compress(w, m);
            if (--w.ref[t] == 0) {
                w.present[t >> 6] &= ~(std::uint64_t{1} << (t & 63));
                recompute(w);
            }
        }
    }

private:
    struct Window {
        std::vector<int> bits;
        int l = 0;
        std::vector<std::uint64_t> present;
        std::vector<std::int32_t> ref;
        std::vector<std::int16_t> max_under, max_over;
    };

    static std::size_t compress(const Window& w, Mask m) {
        std::size_t t = 0;
        for (std::size_t j = 0; j < w.bits.size(); ++j)
            t |= (std::size_t)((m >> w.bits[j]) & 1u) << j;
        return t;
    }

    void recompute(Window& w) {
        const std::size_t size = std::size_t{1} << w.l;
        auto present = [&](std::size_t t) -> bool {
            return (w.present[t >> 6] >> (t & 63)) & 1u;
        };
        for (std::size_t t = 0; t < size; ++t) {
            int sub = 0;
            for (std::size_t rest = t; rest;) {
                std::size_t low = rest & (~rest + 1);
                sub = std::max(sub, (int)w.max_under[t ^ low]);
                rest ^= low;
            }
            w.max_under[t] = (std::int16_t)(present(t) ? sub + 1 : sub);
        }
        const std::size_t full = size - 1;
        for (std::size_t t = size; t-- > 0;) {
            int sup = 0;
            for (std::size_t rest = full ^ t; rest;) {
                std::size_t low = rest & (~rest + 1);
                sup = std::max(sup, (int)w.max_over[t | low]);
                rest ^= low;
            }
            w.max_over[t] = (std::int16_t)(present(t) ? sup + 1 : sup);
        }
    }

    int k_;
    std::vector<Window> windows_;
    std::vector<Mask> stack_;
};

// P-freeness under insertions. Chain posets get a dedicated longest-chain
// update; general trees re-run the embedding search constrained to use the
// new set.
class PosetOracle final : public IncrementalOracle {
public:
    explicit PosetOracle(const TreePoset& poset)
        : poset_(&poset), is_chain_(poset.is_chain()) {}

    bool can_add(Mask m) override {
        if ((int)members_.size() + 1 < poset_->node_count()) return true;
        if (is_chain_) {
            int down = 1, up = 1;
            for (std::size_t i = 0; i < members_.size(); ++i) {
                if (proper_subset_of(members_[i], m)) down = std::max(down, down_[i] + 1);
                else if (proper_subset_of(m, members_[i])) up = std::max(up, up_[i] + 1);
            }
            return down + up - 1 < poset_->node_count();
        }
        return !embeds_with_extra(members_, *poset_, m);
    }

    void push(Mask m) override {
        members_.push_back(m);
        if (is_chain_) recompute_chain_state();
    }

    void pop() override {
        members_.pop_back();
        if (is_chain_) recompute_chain_state();
    }

private:
    void recompute_chain_state() {
        std::size_t m = members_.size();
        std::vector<std::size_t> order(m);
        for (std::size_t i = 0; i < m; ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            return canonical_less(members_[a], members_[b]);
        });
        down_.assign(m, 1);
        up_.assign(m, 1);
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = 0; b < a; ++b) {
                std::size_t i = order[a], j = order[b];
                if (proper_subset_of(members_[j], members_[i]))
                    down_[i] = std::max(down_[i], down_[j] + 1);
            }
        }
        for (std::size_t a = m; a-- > 0;) {
            for (std::size_t b = a + 1; b < m; ++b) {
                std::size_t i = order[a], j = order[b];
                if (proper_subset_of(members_[i], members_[j]))
                    up_[i] = std::max(up_[i], up_[j] + 1);
            }
        }
    }

    const TreePoset* poset_;
    bool is_chain_;
    std::vector<Mask> members_;
    std::vector<int> down_, up_;
};

// Pairwise conflict oracle for uniform families with disjoint shadows: two
// i-sets conflict iff they share i-1 elements. Every chosen member consumes i
// fresh (i-1)-sets, which caps the family size by C(n,i-1)/i.
class ShadowOracle final : public IncrementalOracle {
public:
    ShadowOracle(const std::vector<Mask>& candidates, int n, int i) : i_(i) {
        total_low_ = (long long)binomial(n, i - 1);
        std::size_t m = candidates.size();
        words_ = (m + 63) / 64;
        conflict_.assign(m * words_, 0);
        for (std::size_t a = 0; a < m; ++a) {
            index_.emplace(candidates[a], a);
            for (std::size_t b = a + 1; b < m; ++b) {
                if (popcount(candidates[a] & candidates[b]) == i - 1) {
                    conflict_[a * words_ + (b >> 6)] |= std::uint64_t{1} << (b & 63);
                    conflict_[b * words_ + (a >> 6)] |= std::uint64_t{1} << (a & 63);
                }
            }
        }
        chosen_.assign(words_, 0);
    }

    bool can_add(Mask m) override {
        std::size_t idx = index_.at(m);
        for (std::size_t w = 0; w < words_; ++w) {
            if (conflict_[idx * words_ + w] & chosen_[w]) return false;
        }
        return true;
    }

    void push(Mask m) override {
        std::size_t idx = index_.at(m);
        chosen_[idx >> 6] |= std::uint64_t{1} << (idx & 63);
        stack_.push_back(idx);
    }

    void pop() override {
        std::size_t idx = stack_.back();
        stack_.pop_back();
        chosen_[idx >> 6] &= ~(std::uint64_t{1} << (idx & 63));
    }

    long long extra_headroom(int chosen) const override {
        return (total_low_ - (long long)i_ * chosen) / i_;
    }

private:
    int i_;
    long long total_low_;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> conflict_;
    std::vector<std::uint64_t> chosen_;
    std::unordered_map<Mask, std::size_t> index_;
    std::vector<std::size_t> stack_;
};

// ---- branch and bound ------------------------------------------------------
//
// Depth-first include/exclude over the candidate list in canonical order,
// include branch first. Each include filters the remaining candidates through
// the oracle (sound because the predicates are hereditary), the symmetric
// chain partition caps how many sets any extension can still add, and an
// optional lex-leader test against transposition images rejects partial
// assignments that cannot lead to an orbit leader.

constexpr std::int8_t kUnknown = 0, kIn = 1, kOut = 2;

struct BnBInput {
    Ground ground{1};
    std::vector<Mask> candidates;  // canonical order, closed under S_n
    std::function<std::unique_ptr<IncrementalOracle>()> make_oracle;
    int chain_cap = 1;
    std::uint64_t seed_size = 0;
    std::vector<Mask> seed_family;
    SearchBudget budget;
};

struct Shared {
    std::atomic<std::uint64_t> best{0};
    std::atomic<long long> nodes{0};
    Clock::time_point deadline;
    bool use_deadline = false;
};

struct WorkerOutput {
    std::uint64_t best = 0;
    std::vector<std::vector<Mask>> witnesses;
    long long nodes = 0;
    bool aborted = false;
};

struct Searcher {
    const BnBInput& in;
    const std::vector<int>& chain_of;                 // per candidate
    const std::vector<std::vector<int>>* perms;       // candidate permutations, or null
    Shared* shared;                                   // null in deterministic mode
    std::ostream* log = nullptr;
    Clock::time_point start;

    std::unique_ptr<IncrementalOracle> oracle;
    std::vector<std::int8_t> state;
    std::vector<int> chosen;
    std::vector<int> chain_used;
    std::vector<int> chain_avail, chain_stamp, touched;
    int stamp = 0;

    WorkerOutput out;
    long long node_budget = LLONG_MAX;

    Searcher(const BnBInput& input, const std::vector<int>& chains, int num_chains,
             const std::vector<std::vector<int>>* perms_, Shared* shared_,
             Clock::time_point start_)
        : in(input), chain_of(chains), perms(perms_), shared(shared_), start(start_) {
        oracle = in.make_oracle();
        state.assign(in.candidates.size(), kUnknown);
        chain_used.assign(num_chains, 0);
        chain_avail.assign(num_chains, 0);
        chain_stamp.assign(num_chains, -1);
        out.best = in.seed_size;
    }

    bool budget_exceeded() {
        if (out.nodes > node_budget) return true;
        if (shared) {
            if (shared->nodes.fetch_add(1, std::memory_order_relaxed) >= in.budget.max_nodes)
                return true;
            if (shared->use_deadline && (out.nodes & 255) == 0 && Clock::now() > shared->deadline)
                return true;
        }
        return false;
    }

    std::uint64_t effective_best() const {
        std::uint64_t b = out.best;
        if (shared) b = std::max(b, shared->best.load(std::memory_order_relaxed));
        return b;
    }

    void offer_current() {
        std::uint64_t s = chosen.size();
        if (s > out.best) {
            out.best = s;
            out.witnesses.clear();
            out.witnesses.push_back(family_of_chosen());
            if (shared) {
                std::uint64_t prev = shared->best.load();
                while (prev < s && !shared->best.compare_exchange_weak(prev, s)) {
                }
            }
            if (log) {
                *log << "# incumbent size=" << s << " nodes=" << out.nodes
                     << " elapsed=" << seconds_since(start) << "\n";
            }
        } else if (s == out.best && s > 0 &&
                   (int)out.witnesses.size() < in.budget.witness_cap) {
            out.witnesses.push_back(family_of_chosen());
        }
    }

    std::vector<Mask> family_of_chosen() const {
        std::vector<Mask> fam;
        fam.reserve(chosen.size());
        for (int c : chosen) fam.push_back(in.candidates[c]);
        return fam;  // chosen indices ascend, so this is already canonical
    }

    long long scd_remaining(const std::vector<int>& avail, std::size_t from) {
        ++stamp;
        touched.clear();
        for (std::size_t i = from; i < avail.size(); ++i) {
            int ch = chain_of[avail[i]];
            if (chain_stamp[ch] != stamp) {
                chain_stamp[ch] = stamp;
                chain_avail[ch] = 0;
                touched.push_back(ch);
            }
            ++chain_avail[ch];
        }
        long long sum = 0;
        for (int ch : touched) {
            int headroom = in.chain_cap - chain_used[ch];
            if (headroom > 0) sum += std::min(headroom, chain_avail[ch]);
        }
        return sum;
    }

    // True when some transposition image of the current partial 0/1 vector is
    // forced lexicographically larger, i.e. this branch cannot contain an
    // orbit leader.
    bool lex_pruned() const {
        if (!perms) return false;
        for (const std::vector<int>& perm : *perms) {
            for (std::size_t i = 0; i < state.size(); ++i) {
                std::int8_t ri = state[i], li = state[perm[i]];
                if (ri == kUnknown || li == kUnknown) break;
                if (li == ri) continue;
                if (li == kIn) return true;
                break;
            }
        }
        return false;
    }

    void dfs(const std::vector<int>& avail, std::size_t from) {
        if (out.aborted) return;
        ++out.nodes;
        if (budget_exceeded()) {
            out.aborted = true;
            return;
        }
        long long rem = scd_remaining(avail, from);
        rem = std::min(rem, oracle->extra_headroom((int)chosen.size()));
        std::uint64_t reachable = chosen.size() + (std::uint64_t)rem;
        std::uint64_t best = effective_best();
        if (reachable < best) return;
        if (reachable == best &&
            !(out.best == best && (int)out.witnesses.size() < in.budget.witness_cap))
            return;
        if (from == avail.size()) return;

        int c = avail[from];
        // include
        {
            oracle->push(in.candidates[c]);
            chosen.push_back(c);
            state[c] = kIn;
            ++chain_used[chain_of[c]];
            offer_current();
            std::vector<int> next;
            std::vector<int> dropped;
            next.reserve(avail.size() - from - 1);
            for (std::size_t i = from + 1; i < avail.size(); ++i) {
                int r = avail[i];
                if (oracle->can_add(in.candidates[r])) {
                    next.push_back(r);
                } else {
                    state[r] = kOut;
                    dropped.push_back(r);
                }
            }
            if (!lex_pruned()) dfs(next, 0);
            for (int r : dropped) state[r] = kUnknown;
            --chain_used[chain_of[c]];
            chosen.pop_back();
            oracle->pop();
        }
        if (out.aborted) {
            state[c] = kUnknown;
            return;
        }
        // exclude
        state[c] = kOut;
        if (!lex_pruned()) dfs(avail, from + 1);
        state[c] = kUnknown;
    }
};

struct PrefixTask {
    std::vector<std::pair<int, bool>> decisions;  // (candidate index, include?)
};

SearchResult run_branch_and_bound(const BnBInput& in) {
    Clock::time_point start = Clock::now();
    const SearchBudget& budget = in.budget;

    SearchResult result;
    result.best_size = in.seed_size;
    result.status = SearchStatus::proven_optimal;

    const std::size_t num_cands = in.candidates.size();
    const int n = in.ground.n();

    // chain ids per candidate
    std::vector<int> full_ids = scd_chain_ids(n);
    std::vector<int> chain_of(num_cands);
    int num_chains = 0;
    for (std::size_t i = 0; i < num_cands; ++i) {
        chain_of[i] = full_ids[in.candidates[i]];
        num_chains = std::max(num_chains, chain_of[i] + 1);
    }

    // transposition images of candidates, for lex-leader pruning
    std::vector<std::vector<int>> perms;
    bool symmetry = budget.symmetry_reduction && n <= 12;
    if (symmetry) {
        std::vector<int> mask_to_cand(std::size_t{1} << n, -1);
        for (std::size_t i = 0; i < num_cands; ++i) mask_to_cand[in.candidates[i]] = (int)i;
        for (int a = 0; a < n && symmetry; ++a) {
            for (int b = a + 1; b < n && symmetry; ++b) {
                std::vector<int> p(num_cands);
                for (std::size_t i = 0; i < num_cands; ++i) {
                    Mask m = in.candidates[i];
                    Mask swapped = m & ~((Mask{1} << a) | (Mask{1} << b));
                    if ((m >> a) & 1u) swapped |= Mask{1} << b;
                    if ((m >> b) & 1u) swapped |= Mask{1} << a;
                    int j = mask_to_cand[swapped];
                    if (j < 0) {
                        symmetry = false;  // candidate set not closed; skip pruning
                        break;
                    }
                    p[i] = j;
                }
                if (symmetry) perms.push_back(std::move(p));
            }
        }
    }
    const std::vector<std::vector<int>>* perm_ptr = symmetry ? &perms : nullptr;

    Shared shared;
    Shared* shared_ptr = nullptr;
    if (!budget.deterministic) {
        shared.best.store(in.seed_size);
        shared.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                      std::chrono::duration<double>(budget.max_seconds));
        shared.use_deadline = true;
        shared_ptr = &shared;
    }

    // Enumerate the frontier: all include/exclude patterns on the first
    // `frontier_depth` candidates, walked in the same order the sequential
    // search would visit them. Solutions among the prefixes are recorded here.
    const int depth = std::min<std::size_t>(budget.frontier_depth, num_cands);
    Searcher prefix_searcher(in, chain_of, num_chains, perm_ptr, shared_ptr, start);
    prefix_searcher.log = budget.log;
    std::vector<PrefixTask> tasks;
    std::vector<std::pair<int, bool>> decisions;

    std::function<void(int)> enumerate = [&](int d) {
        if (d == depth) {
            tasks.push_back(PrefixTask{decisions});
            return;
        }
        ++prefix_searcher.out.nodes;
        // include
        if (prefix_searcher.oracle->can_add(in.candidates[d])) {
            prefix_searcher.oracle->push(in.candidates[d]);
            prefix_searcher.chosen.push_back(d);
            prefix_searcher.state[d] = kIn;
            ++prefix_searcher.chain_used[chain_of[d]];
            prefix_searcher.offer_current();
            decisions.emplace_back(d, true);
            if (!prefix_searcher.lex_pruned()) enumerate(d + 1);
            decisions.pop_back();
            --prefix_searcher.chain_used[chain_of[d]];
            prefix_searcher.chosen.pop_back();
            prefix_searcher.state[d] = kUnknown;
            prefix_searcher.oracle->pop();
        }
        // exclude
        prefix_searcher.state[d] = kOut;
        decisions.emplace_back(d, false);
        if (!prefix_searcher.lex_pruned()) enumerate(d + 1);
        decisions.pop_back();
        prefix_searcher.state[d] = kUnknown;
    };
    enumerate(0);

    const std::uint64_t prefix_best = prefix_searcher.out.best;
    const long long prefix_nodes = prefix_searcher.out.nodes;

    long long per_task_budget = LLONG_MAX;
    if (budget.deterministic && !tasks.empty()) {
        per_task_budget = std::max<long long>(1, (budget.max_nodes - prefix_nodes) /
                                                     (long long)tasks.size());
    }

    std::vector<WorkerOutput> outputs(tasks.size());
    std::atomic<std::size_t> next_task{0};
    int thread_count = std::max(1, std::min<int>(budget.threads, (int)tasks.size()));

    auto run_tasks = [&]() {
        for (;;) {
            std::size_t ti = next_task.fetch_add(1);
            if (ti >= tasks.size()) break;
            Searcher s(in, chain_of, num_chains, perm_ptr, shared_ptr, start);
            s.log = budget.log;
            s.out.best = prefix_best;
            s.node_budget = budget.deterministic ? per_task_budget : LLONG_MAX;
            // replay the prefix decisions
            std::vector<int> avail;
            for (const auto& [c, include] : tasks[ti].decisions) {
                if (include) {
                    s.oracle->push(in.candidates[c]);
                    s.chosen.push_back(c);
                    s.state[c] = kIn;
                    ++s.chain_used[chain_of[c]];
                } else {
                    s.state[c] = kOut;
                }
            }
            for (std::size_t r = depth; r < num_cands; ++r) {
                if (s.oracle->can_add(in.candidates[r])) avail.push_back((int)r);
                else s.state[r] = kOut;
            }
            s.dfs(avail, 0);
            outputs[ti] = std::move(s.out);
        }
    };

    if (thread_count == 1) {
        run_tasks();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(thread_count);
        for (int t = 0; t < thread_count; ++t) pool.emplace_back(run_tasks);
        for (std::thread& t : pool) t.join();
    }

    // merge in canonical subtree order
    std::uint64_t best = std::max(in.seed_size, prefix_best);
    bool aborted = false;
    long long nodes = prefix_nodes;
    for (const WorkerOutput& o : outputs) {
        best = std::max(best, o.best);
        nodes += o.nodes;
        aborted = aborted || o.aborted;
    }
    std::vector<SetFamily> witnesses;
    auto collect = [&](const WorkerOutput& o) {
        if (o.best != best) return;
        for (const std::vector<Mask>& fam : o.witnesses) {
            if ((std::uint64_t)fam.size() != best) continue;
            if ((int)witnesses.size() >= budget.witness_cap) return;
            witnesses.emplace_back(in.ground, fam);
        }
    };
    collect(prefix_searcher.out);
    for (const WorkerOutput& o : outputs) collect(o);
    if (witnesses.empty() && best == in.seed_size)
        witnesses.emplace_back(in.ground, in.seed_family);

    result.best_size = best;
    result.witnesses = std::move(witnesses);
    result.status = aborted ? SearchStatus::lower_bound_only : SearchStatus::proven_optimal;
    result.nodes_explored = nodes;
    result.elapsed_seconds = budget.deterministic ? 0.0 : seconds_since(start);
    return result;
}

std::vector<Mask> all_masks_canonical(int n) {
    std::vector<Mask> out;
    out.reserve(std::size_t{1} << n);
    for (int card = 0; card <= n; ++card) {
        for_each_window(n, card, [&](Mask w) { out.push_back(w); });
    }
    return out;
}

SearchResult trivial_full_power_set(Ground g, bool build_witness) {
    if (g.n() >= 64) throw CapacityError("family size 2^64 does not fit a 64-bit count");
    SearchResult r;
    r.best_size = std::uint64_t{1} << g.n();
    r.status = SearchStatus::proven_optimal;
    if (g.n() <= 16 && build_witness)
        r.witnesses.push_back(band(BandSpec(g, 0, g.n())));
    return r;
}

// Widest band of `width` consecutive levels (the centered one).
SetFamily best_level_band(Ground g, int width) {
    if (width <= 0) return SetFamily(g);
    width = std::min(width, g.n() + 1);
    int best_lo = 0;
    std::uint64_t best_sum = 0;
    for (int lo = 0; lo + width - 1 <= g.n(); ++lo) {
        std::uint64_t sum = 0;
        for (int i = lo; i < lo + width; ++i) sum += binomial(g.n(), i);
        if (sum > best_sum) {
            best_sum = sum;
            best_lo = lo;
        }
    }
    return band(BandSpec(g, best_lo, best_lo + width - 1));
}

// Best construction-backed feasible start for the trace-Sperner search.
SetFamily trace_seed(const TraceProblem& p) {
    Ground g = p.ground;
    int n = g.n(), k = p.k, lp = n - p.l;
    std::vector<SetFamily> options;
    options.push_back(low_levels(g, std::min(k, n)));
    if (k > lp) {
        // band of k-lp consecutive middle levels; sizes inside any co-window
        // trace spread over at most k distinct values
        int width = std::min(k - lp, n + 1);
        options.push_back(best_level_band(g, width));
    }
    // verify when cheap; constructions are feasible by design but the check
    // is inexpensive at the sizes the exact search handles
    SetFamily best(g);
    for (SetFamily& f : options) {
        if (f.size() <= best.size()) continue;
        if (binomial(n, p.l) <= 100000 && !is_trace_sperner(f, p)) continue;
        best = std::move(f);
    }
    return best;
}

}  // namespace

SearchResult max_trace_sperner(const TraceProblem& problem, const SearchBudget& budget) {
    budget.validate();
    Clock::time_point start = Clock::now();
    Ground g = problem.ground;
    const int n = g.n();

    if (problem.k >= problem.l + 1) {
        // no window can carry a chain of more than l+1 trace sets
        SearchResult r = trivial_full_power_set(g, true);
        r.elapsed_seconds = budget.deterministic ? 0.0 : seconds_since(start);
        return r;
    }

    SetFamily seed = trace_seed(problem);

    if (n > 18 || !TraceOracle::tractable(problem, 1 << 28)) {
        SearchResult r;
        r.best_size = seed.size();
        r.witnesses = {seed};
        r.status = SearchStatus::lower_bound_only;
        r.elapsed_seconds = budget.deterministic ? 0.0 : seconds_since(start);
        return r;
    }

    BnBInput in;
    in.ground = g;
    in.candidates = all_masks_canonical(n);
    in.make_oracle = [problem] { return std::make_unique<TraceOracle>(problem); };
    // a symmetric saturated chain of m nested sets yields at least m-(n-l)
    // distinct traces on any l-window, all nested
    in.chain_cap = problem.k + (n - problem.l);
    in.seed_size = seed.size();
    in.seed_family = seed.members();
    in.budget = budget;
    return run_branch_and_bound(in);
}

SearchResult max_p_free(Ground ground, const TreePoset& poset, const SearchBudget& budget) {
    budget.validate();
    Clock::time_point start = Clock::now();
    const int n = ground.n();

    if (poset.height() > n + 1) {
        // an embedding would need a chain of more sets than the lattice has
        SearchResult r = trivial_full_power_set(ground, true);
        r.elapsed_seconds = budget.deterministic ? 0.0 : seconds_since(start);
        return r;
    }

    SetFamily seed = best_level_band(ground, poset.height() - 1);

    if (n > 16) {
        SearchResult r;
        r.best_size = seed.size();
        r.witnesses = {seed};
        r.status = SearchStatus::lower_bound_only;
        r.elapsed_seconds = budget.deterministic ? 0.0 : seconds_since(start);
        return r;
    }

    BnBInput in;
    in.ground = ground;
    in.candidates = all_masks_canonical(n);
    in.make_oracle = [&poset] { return std::make_unique<PosetOracle>(poset); };
    // a chain of node_count sets hosts the poset along any linear extension
    in.chain_cap = poset.node_count() - 1;
    in.seed_size = seed.size();
    in.seed_family = seed.members();
    in.budget = budget;
    return run_branch_and_bound(in);
}

SearchResult max_disjoint_shadow_family(Ground ground, int i, const SearchBudget& budget) {
    budget.validate();
    if (i < 1 || i > ground.n())
        throw RangeError("max_disjoint_shadow_family: need 1 <= i <= n");
    std::vector<Mask> candidates = level(ground, i).members();

    // greedy first-fit incumbent
    std::vector<Mask> greedy;
    {
        ShadowOracle oracle(candidates, ground.n(), i);
        for (Mask m : candidates) {
            if (oracle.can_add(m)) {
                oracle.push(m);
                greedy.push_back(m);
            }
        }
    }

    BnBInput in;
    in.ground = ground;
    in.candidates = std::move(candidates);
    int n = ground.n();
    in.make_oracle = [cands = in.candidates, n, i] {
        return std::make_unique<ShadowOracle>(cands, n, i);
    };
    in.chain_cap = 1;  // a symmetric chain meets a level at most once
    in.seed_size = greedy.size();
    in.seed_family = std::move(greedy);
    in.budget = budget;
    return run_branch_and_bound(in);
}

SearchResult heuristic_lower_bound(const TraceProblem& problem, const SearchBudget& budget) {
    budget.validate();
    Clock::time_point start = Clock::now();
    Ground g = problem.ground;
    const int n = g.n();

    SetFamily seed = trace_seed(problem);
    SearchResult r;
    r.status = SearchStatus::lower_bound_only;

    if (problem.k >= problem.l + 1) {
        r = trivial_full_power_set(g, true);
        r.status = SearchStatus::lower_bound_only;
        r.elapsed_seconds = budget.deterministic ? 0.0 : seconds_since(start);
        return r;
    }

    if (n > 20 || !TraceOracle::tractable(problem, 1 << 28)) {
        r.best_size = seed.size();
        r.witnesses = {seed};
        r.elapsed_seconds = budget.deterministic ? 0.0 : seconds_since(start);
        return r;
    }

    TraceOracle oracle(problem);
    std::vector<Mask> current = seed.members();
    for (Mask m : current) oracle.add_member(m);

    std::vector<Mask> pool = all_masks_canonical(n);
    std::mt19937_64 rng(budget.seed);
    auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                std::chrono::duration<double>(budget.max_seconds));
    auto out_of_time = [&] { return !budget.deterministic && Clock::now() > deadline; };

    auto in_current = [&](Mask m) {
        return std::find(current.begin(), current.end(), m) != current.end();
    };

    // grow to a maximal family
    auto add_pass = [&](Mask skip) {
        bool changed = false;
        for (Mask m : pool) {
            if (m == skip || in_current(m)) continue;
            if (oracle.can_add(m)) {
                oracle.add_member(m);
                current.push_back(m);
                changed = true;
            }
            if (out_of_time()) break;
        }
        return changed;
    };

    for (int pass = 0; pass < 50 && add_pass(~Mask{0}); ++pass) {
        if (out_of_time()) break;
    }

    std::vector<Mask> best = current;

    // remove-and-refill kicks: drop one member, grow greedily without it,
    // keep the result only when strictly larger
    const int kick_rounds = 2;
    for (int round = 0; round < kick_rounds && !out_of_time(); ++round) {
        std::vector<Mask> order = current;
        if (!budget.deterministic) std::shuffle(order.begin(), order.end(), rng);
        for (Mask v : order) {
            if (out_of_time()) break;
            if (!in_current(v)) continue;
            std::size_t before = current.size();
            oracle.remove_member(v);
            current.erase(std::find(current.begin(), current.end(), v));
            add_pass(v);
            if (current.size() <= before - 1) {
                // no gain; put v back (it still fits: nothing new blocks it)
                if (oracle.can_add(v)) {
                    oracle.add_member(v);
                    current.push_back(v);
                } else {
                    add_pass(~Mask{0});
                }
            }
            if (current.size() > best.size()) best = current;
        }
    }

    if (current.size() > best.size()) best = current;
    r.best_size = best.size();
    r.witnesses = {SetFamily(g, best)};
    r.elapsed_seconds = budget.deterministic ? 0.0 : seconds_since(start);
    return r;
}

DecompositionReport check_decomposition_inequality(Ground ground, int k, int lp,
                                         const SearchBudget& budget) {
    if (lp < 1 || lp >= k) throw RangeError("check_decomposition_inequality: need 1 <= lp < k");
    DecompositionReport rep;
    rep.n = ground.n();
    rep.k = k;
    rep.lp = lp;
    rep.lhs = max_trace_sperner(TraceProblem::co(ground, lp, k), budget);
    rep.base = max_trace_sperner(TraceProblem::co(ground, lp, lp), budget);
    TreePoset tree = build_complete_tree_poset(k - lp + 1, 1 << lp);
    rep.la = max_p_free(ground, tree, budget);
    rep.conclusive = rep.lhs.status == SearchStatus::proven_optimal &&
                     rep.base.status == SearchStatus::proven_optimal &&
                     rep.la.status == SearchStatus::proven_optimal;
    if (rep.conclusive) {
        rep.slack = (long long)(rep.base.best_size + rep.la.best_size) -
                    (long long)rep.lhs.best_size;
        if (rep.slack < 0)
            throw std::logic_error("check_decomposition_inequality: exact values violate the inequality");
    }
    return rep;
}

}  // namespace sperner
