#ifndef SPERNER_FAMILY_HPP
#define SPERNER_FAMILY_HPP

#include <optional>
#include <vector>

#include "sperner/bits.hpp"
#include "sperner/errors.hpp"

namespace sperner {

// The ground set [n]. Capped at 64 so that any subset fits one word.
class Ground {
public:
    explicit Ground(int n) : n_(n) {
        if (n < 1 || n > 64) throw RangeError("ground size must be in 1..64");
    }
    int n() const { return n_; }
    Mask full() const { return full_mask(n_); }
    friend bool operator==(Ground a, Ground b) { return a.n_ == b.n_; }
    friend bool operator!=(Ground a, Ground b) { return a.n_ != b.n_; }

private:
    int n_;
};

// Deduplicated family of subsets of a fixed ground set, kept in canonical
// (cardinality, value) order. Immutable after construction.
class SetFamily {
public:
    explicit SetFamily(Ground ground) : ground_(ground) {}

    // Sorts, deduplicates, and checks every member against the ground set.
    SetFamily(Ground ground, std::vector<Mask> members);

    Ground ground() const { return ground_; }
    const std::vector<Mask>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(Mask m) const;

    friend bool operator==(const SetFamily& a, const SetFamily& b) {
        return a.ground_ == b.ground_ && a.members_ == b.members_;
    }

private:
    Ground ground_;
    std::vector<Mask> members_;
};

// Strictly increasing (under inclusion) sequence of sets. Length counts sets,
// so a single set is a chain of length 1.
struct Chain {
    std::vector<Mask> links;
    int length() const { return (int)links.size(); }
};

bool is_strict_chain(const std::vector<Mask>& links);

// Sequence of equal-cardinality sets where each step swaps one element for a
// fresh one (one never seen in any earlier step).
struct TightPath {
    std::vector<Mask> steps;
    int length() const { return (int)steps.size(); }
};

// Parameters of the trace-Sperner predicate: windows of size l, chains of at
// most k sets allowed in every traced family.
struct TraceProblem {
    Ground ground;
    int l;
    int k;

    TraceProblem(Ground g, int l_, int k_) : ground(g), l(l_), k(k_) {
        if (l < 1 || l > g.n()) throw RangeError("trace window size must be in 1..n");
        if (k < 1) throw RangeError("Sperner depth k must be >= 1");
    }
    // The co-window form: windows are the complements of lp-subsets.
    static TraceProblem co(Ground g, int lp, int k) { return TraceProblem(g, g.n() - lp, k); }
    int lp() const { return ground.n() - l; }
};

// ---- operations -----------------------------------------------------------

// {F ∩ window : F in family}, deduplicated, same ground set.
SetFamily trace(const SetFamily& family, Mask window);

// A maximum-length chain inside the family; among all maximum chains, the one
// whose link sequence is canonically smallest. Throws EmptyInputError if the
// family is empty.
Chain longest_chain(const SetFamily& family);

// Length (number of sets) of the longest chain; 0 for the empty family.
int longest_chain_length(const SetFamily& family);

// No chain of k+1 sets anywhere in the family. True for the empty family.
bool is_k_sperner(const SetFamily& family, int k);

// Every trace on an l-window is k-Sperner.
bool is_trace_sperner(const SetFamily& family, const TraceProblem& problem);

struct TraceViolation {
    Mask window;  // the l-window whose trace carries a too-long chain
    Chain chain;  // k+1 distinct members of the trace, strictly nested
};

// First violating window in increasing mask order, with the canonically first
// chain of exactly k+1 trace sets; nullopt iff is_trace_sperner holds.
std::optional<TraceViolation> find_violation(const SetFamily& family,
                                             const TraceProblem& problem);

// All subsets obtained by deleting one element. Throws EmptyInputError on ∅.
SetFamily shadow(Ground ground, Mask set);

// Shadow restricted to deletions of elements that lie in the anchor set.
SetFamily modified_shadow(Ground ground, Mask set, Mask anchor);

// Exhaustive first tight path (in depth-first canonical order) of the given
// length inside a uniform family; nullopt if none exists.
std::optional<TightPath> find_tight_path(const SetFamily& family, int length);

// Members of cardinality exactly i.
SetFamily uniform_slice(const SetFamily& family, int i);

// ---- utilities ------------------------------------------------------------

// Image of a mask/family under a permutation of ground positions
// (perm[i] = new 0-based position of old position i).
Mask permute_mask(Mask m, const std::vector<int>& perm);
SetFamily permute_family(const SetFamily& family, const std::vector<int>& perm);

// Member-wise complement within the ground set.
SetFamily complement_family(const SetFamily& family);

}  // namespace sperner

#endif
