#include "sperner/family.hpp"

#include <algorithm>
#include <cstring>

namespace sperner {

namespace {

void canonicalize(std::vector<Mask>& masks) {
    std::sort(masks.begin(), masks.end(), canonical_less);
    masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
}

// Longest chain length among a canonically sorted, deduplicated list of masks
// via pairwise DP. Proper supersets sit strictly later in canonical order, so
// one forward pass suffices.
int pairwise_chain_length(const std::vector<Mask>& sorted) {
    std::size_t m = sorted.size();
    std::vector<int> down(m, 1);
    int best = 0;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (proper_subset_of(sorted[j], sorted[i]) && down[j] + 1 > down[i])
                down[i] = down[j] + 1;
        }
        best = std::max(best, down[i]);
    }
    return best;
}

// Longest chain length among arbitrary subsets of a window of l bits via a DP
// over the full 2^l lattice: maxUnder[t] = longest chain among present sets
// that are subsets of t. O(2^l * l) time, scratch reused across calls.
int lattice_chain_length(const std::vector<Mask>& members, Mask window, int l) {
    thread_local std::vector<std::uint64_t> present;
    thread_local std::vector<std::int16_t> max_under;
    const std::size_t size = std::size_t{1} << l;
    present.assign((size + 63) / 64, 0);
    if (max_under.size() < size) max_under.resize(size);

    const std::vector<int> bits = bit_positions(window);
    for (Mask m : members) {
        Mask x = m & window;
        std::size_t t = 0;
        for (int j = 0; j < l; ++j) t |= ((x >> bits[j]) & 1u) << j;
        present[t >> 6] |= std::uint64_t{1} << (t & 63);
    }

    int best = 0;
    for (std::size_t t = 0; t < size; ++t) {
        int sub = 0;
        for (std::size_t rest = t; rest;) {
            std::size_t low = rest & (~rest + 1);
            sub = std::max(sub, (int)max_under[t ^ low]);
            rest ^= low;
        }
        bool here = (present[t >> 6] >> (t & 63)) & 1u;
        int mu = here ? sub + 1 : sub;
        max_under[t] = (std::int16_t)mu;
        best = std::max(best, mu);
    }
    return best;
}

// Longest chain length of {m ∩ window : m in members}; picks whichever of the
// two DPs is cheaper for the instance.
int trace_chain_length(const std::vector<Mask>& members, Mask window) {
    int l = popcount(window);
    std::size_t m = members.size();
    if (l <= 20 && (std::size_t{1} << l) * (std::size_t)l <= 4 * m * m)
        return lattice_chain_length(members, window, l);
    std::vector<Mask> traces;
    traces.reserve(m);
    for (Mask x : members) traces.push_back(x & window);
    canonicalize(traces);
    return pairwise_chain_length(traces);
}

// Canonically first chain of exactly `target` sets among a canonically sorted
// list; empty result if no chain is that long. Greedy over up[] = longest
// chain starting at each member.
std::vector<Mask> first_chain_with_length(const std::vector<Mask>& sorted, int target) {
    std::size_t m = sorted.size();
    std::vector<int> up(m, 1);
    for (std::size_t ii = m; ii-- > 0;) {
        for (std::size_t j = ii + 1; j < m; ++j) {
            if (proper_subset_of(sorted[ii], sorted[j]) && up[j] + 1 > up[ii])
                up[ii] = up[j] + 1;
        }
    }
    std::vector<Mask> chain;
    int need = target;
    std::size_t from = 0;
    while (need > 0) {
        bool found = false;
        for (std::size_t j = from; j < m; ++j) {
            if (up[j] < need) continue;
            if (!chain.empty() && !proper_subset_of(chain.back(), sorted[j])) continue;
            chain.push_back(sorted[j]);
            from = j + 1;
            found = true;
            break;
        }
        if (!found) return {};
        --need;
    }
    return chain;
}

}  // namespace

SetFamily::SetFamily(Ground ground, std::vector<Mask> members) : ground_(ground) {
    for (Mask m : members) {
        if (m & ~ground.full())
            throw GroundMismatchError("family member has elements outside the ground set");
    }
    canonicalize(members);
    members_ = std::move(members);
}

bool SetFamily::contains(Mask m) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), m, canonical_less);
    return it != members_.end() && *it == m;
}

bool is_strict_chain(const std::vector<Mask>& links) {
    if (links.empty()) return false;
    for (std::size_t i = 0; i + 1 < links.size(); ++i) {
        if (!proper_subset_of(links[i], links[i + 1])) return false;
    }
    return true;
}

SetFamily trace(const SetFamily& family, Mask window) {
    if (window & ~family.ground().full())
        throw GroundMismatchError("trace window has elements outside the ground set");
    std::vector<Mask> traces;
    traces.reserve(family.size());
    for (Mask m : family.members()) traces.push_back(m & window);
    return SetFamily(family.ground(), std::move(traces));
}

Chain longest_chain(const SetFamily& family) {
    if (family.empty()) throw EmptyInputError("longest_chain: empty family");
    int len = pairwise_chain_length(family.members());
    return Chain{first_chain_with_length(family.members(), len)};
}

int longest_chain_length(const SetFamily& family) {
    if (family.empty()) return 0;
    return trace_chain_length(family.members(), family.ground().full());
}

bool is_k_sperner(const SetFamily& family, int k) {
    if (k < 1) throw RangeError("is_k_sperner: k must be >= 1");
    return longest_chain_length(family) <= k;
}

bool is_trace_sperner(const SetFamily& family, const TraceProblem& problem) {
    if (problem.ground != family.ground())
        throw GroundMismatchError("is_trace_sperner: problem and family disagree on n");
    bool ok = true;
    for_each_window(problem.ground.n(), problem.l, [&](Mask w) {
        if (ok && trace_chain_length(family.members(), w) > problem.k) ok = false;
    });
    return ok;
}

std::optional<TraceViolation> find_violation(const SetFamily& family,
                                             const TraceProblem& problem) {
    if (problem.ground != family.ground())
        throw GroundMismatchError("find_violation: problem and family disagree on n");
    std::optional<TraceViolation> result;
    for_each_window(problem.ground.n(), problem.l, [&](Mask w) {
        if (result) return;
        if (trace_chain_length(family.members(), w) > problem.k) {
            std::vector<Mask> traces;
            traces.reserve(family.size());
            for (Mask m : family.members()) traces.push_back(m & w);
            canonicalize(traces);
            result = TraceViolation{w, Chain{first_chain_with_length(traces, problem.k + 1)}};
        }
    });
    return result;
}

SetFamily shadow(Ground ground, Mask set) {
    if (set == 0) throw EmptyInputError("shadow: empty set");
    if (set & ~ground.full())
        throw GroundMismatchError("shadow: set has elements outside the ground set");
    std::vector<Mask> out;
    for (Mask rest = set; rest;) {
        Mask low = rest & (~rest + 1);
        out.push_back(set ^ low);
        rest ^= low;
    }
    return SetFamily(ground, std::move(out));
}

SetFamily modified_shadow(Ground ground, Mask set, Mask anchor) {
    if (set == 0) throw EmptyInputError("modified_shadow: empty set");
    if ((set | anchor) & ~ground.full())
        throw GroundMismatchError("modified_shadow: elements outside the ground set");
    std::vector<Mask> out;
    for (Mask rest = set & anchor; rest;) {
        Mask low = rest & (~rest + 1);
        out.push_back(set ^ low);
        rest ^= low;
    }
    return SetFamily(ground, std::move(out));
}

namespace {

bool tight_path_dfs(const std::vector<Mask>& members, int length,
                    std::vector<Mask>& path, Mask seen) {
    if ((int)path.size() == length) return true;
    for (Mask m : members) {
        if (!path.empty()) {
            Mask fresh = m & ~path.back();
            if (popcount(fresh) != 1) continue;   // exactly one element swapped in
            if (fresh & seen) continue;           // and it must be genuinely new
        }
        path.push_back(m);
        if (tight_path_dfs(members, length, path, seen | m)) return true;
        path.pop_back();
    }
    return false;
}

}  // namespace

std::optional<TightPath> find_tight_path(const SetFamily& family, int length) {
    if (length < 1) throw RangeError("find_tight_path: length must be >= 1");
    if (!family.empty()) {
        int card = popcount(family.members().front());
        for (Mask m : family.members()) {
            if (popcount(m) != card)
                throw UniformityError("find_tight_path: family is not uniform");
        }
    }
    std::vector<Mask> path;
    if (tight_path_dfs(family.members(), length, path, 0))
        return TightPath{std::move(path)};
    return std::nullopt;
}

SetFamily uniform_slice(const SetFamily& family, int i) {
    if (i < 0 || i > family.ground().n())
        throw RangeError("uniform_slice: cardinality out of range");
    std::vector<Mask> out;
    for (Mask m : family.members()) {
        if (popcount(m) == i) out.push_back(m);
    }
    return SetFamily(family.ground(), std::move(out));
}

Mask permute_mask(Mask m, const std::vector<int>& perm) {
    Mask out = 0;
    for (Mask rest = m; rest;) {
        Mask low = rest & (~rest + 1);
        out |= Mask{1} << perm[std::countr_zero(low)];
        rest ^= low;
    }
    return out;
}

SetFamily permute_family(const SetFamily& family, const std::vector<int>& perm) {
    std::vector<Mask> out;
    out.reserve(family.size());
    for (Mask m : family.members()) out.push_back(permute_mask(m, perm));
    return SetFamily(family.ground(), std::move(out));
}

SetFamily complement_family(const SetFamily& family) {
    Mask full = family.ground().full();
    std::vector<Mask> out;
    out.reserve(family.size());
    for (Mask m : family.members()) out.push_back(full ^ m);
    return SetFamily(family.ground(), std::move(out));
}

}  // namespace sperner
