#include "sperner/poset.hpp"

#include <algorithm>
#include <queue>

namespace sperner {

TreePoset::TreePoset(std::vector<int> parent) {
    const int n = (int)parent.size();
    if (n < 1) throw Error("poset: needs at least one node");
    if (parent[0] != -1) throw Error("poset: node 0 must be the root (parent -1)");
    std::vector<std::vector<int>> kids(n);
    for (int i = 1; i < n; ++i) {
        if (parent[i] < 0 || parent[i] >= n || parent[i] == i)
            throw Error("poset: parent index out of range");
        kids[parent[i]].push_back(i);
    }
    // Relabel in BFS order from the root; any disconnected part (which in
    // parent form means a cycle off the root) is detected by the visit count.
    std::vector<int> order;
    order.reserve(n);
    std::vector<int> old_level(n, 0);
    std::queue<int> q;
    q.push(0);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        order.push_back(u);
        for (int v : kids[u]) {
            old_level[v] = old_level[u] + 1;
            q.push(v);
        }
    }
    if ((int)order.size() != n) throw Error("poset: parent links do not form a single tree");

    std::vector<int> new_label(n);
    for (int i = 0; i < n; ++i) new_label[order[i]] = i;
    parent_.assign(n, -1);
    level_.assign(n, 0);
    children_.assign(n, {});
    for (int i = 0; i < n; ++i) {
        int u = order[i];
        level_[i] = old_level[u];
        if (u != 0) {
            parent_[i] = new_label[parent[u]];
            children_[parent_[i]].push_back(i);
        }
        height_ = std::max(height_, level_[i] + 1);
    }
}

bool TreePoset::is_complete_tree() const {
    std::size_t c = 0;
    for (int u = 0; u < node_count(); ++u) {
        if (children_[u].empty()) {
            if (level_[u] != height_ - 1) return false;
        } else {
            if (c == 0) c = children_[u].size();
            if (children_[u].size() != c) return false;
        }
    }
    return true;
}

bool TreePoset::is_chain() const {
    for (int u = 0; u < node_count(); ++u) {
        if (children_[u].size() > 1) return false;
    }
    return true;
}

TreePoset build_chain_poset(int k) {
    if (k < 1) throw RangeError("chain poset: k must be >= 1");
    std::vector<int> parent(k);
    for (int i = 0; i < k; ++i) parent[i] = i - 1;
    return TreePoset(std::move(parent));
}

TreePoset build_complete_tree_poset(int h, int c, long long node_cap) {
    if (h < 1 || c < 1) throw RangeError("complete tree poset: h, c must be >= 1");
    long long count = 0, layer = 1;
    for (int i = 0; i < h; ++i) {
        count += layer;
        if (count > node_cap) throw CapacityError("complete tree poset: node count exceeds cap");
        if (i + 1 < h && layer > node_cap / c + 1) throw CapacityError("complete tree poset: node count exceeds cap");
        layer *= c;
    }
    std::vector<int> parent(count, -1);
    int next = 1;
    for (int u = 0; next < count; ++u) {
        for (int j = 0; j < c && next < count; ++j) parent[next++] = u;
    }
    return TreePoset(std::move(parent));
}

std::pair<int, int> height_and_level_count(const TreePoset& poset) {
    return {poset.height(), poset.height() - 1};
}

namespace {

using Bitset = std::vector<std::uint64_t>;

inline void bitset_set(Bitset& b, std::size_t i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
inline bool bitset_get(const Bitset& b, std::size_t i) {
    return (b[i >> 6] >> (i & 63)) & 1u;
}

// Per (node, member) feasibility of the subtree below the node, ignoring
// injectivity across sibling subtrees; computed bottom-up. Used both as the
// search's memo table and as a cheap whole-family screen.
std::vector<Bitset> subtree_candidates(const std::vector<Mask>& members,
                                       const TreePoset& poset) {
    const std::size_t m = members.size();
    const std::size_t words = (m + 63) / 64;
    std::vector<Bitset> cand(poset.node_count(), Bitset(words, 0));
    for (int u = poset.node_count(); u-- > 0;) {
        for (std::size_t f = 0; f < m; ++f) {
            bool ok = true;
            for (int c : poset.children(u)) {
                bool found = false;
                for (std::size_t g = 0; g < m && !found; ++g) {
                    if (bitset_get(cand[c], g) && proper_subset_of(members[g], members[f]))
                        found = true;
                }
                if (!found) {
                    ok = false;
                    break;
                }
            }
            if (ok) bitset_set(cand[u], f);
        }
    }
    return cand;
}

struct EmbedSearch {
    const std::vector<Mask>& members;
    const TreePoset& poset;
    const std::vector<Bitset>& cand;
    std::vector<int> assign;      // node -> member index, -1 while unset
    std::vector<char> used;       // member index -> taken
    int forced_node = -1;         // optional: this node must take forced_member
    std::size_t forced_member = 0;

    bool run() {
        assign.assign(poset.node_count(), -1);
        used.assign(members.size(), 0);
        return place(0);
    }

    bool place(int u) {
        if (u == poset.node_count()) return true;
        int p = poset.parent(u);
        for (std::size_t f = 0; f < members.size(); ++f) {
            if (used[f] || !bitset_get(cand[u], f)) continue;
            if (forced_node == u && f != forced_member) continue;
            if (forced_node != -1 && forced_node != u && f == forced_member) continue;
            if (p != -1 && !proper_subset_of(members[f], members[(std::size_t)assign[p]]))
                continue;
            assign[u] = (int)f;
            used[f] = 1;
            if (place(u + 1)) return true;
            used[f] = 0;
            assign[u] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<Embedding> contains_poset(const SetFamily& family, const TreePoset& poset) {
    if ((int)family.size() < poset.node_count()) return std::nullopt;
    auto cand = subtree_candidates(family.members(), poset);
    EmbedSearch search{family.members(), poset, cand, {}, {}};
    if (!search.run()) return std::nullopt;
    Embedding e;
    e.assignment.reserve(poset.node_count());
    for (int u = 0; u < poset.node_count(); ++u)
        e.assignment.push_back(family.members()[(std::size_t)search.assign[u]]);
    return e;
}

// True iff members ∪ {extra} hosts the poset; the family itself is assumed
// P-free, so only embeddings using `extra` are searched.
bool embeds_with_extra(const std::vector<Mask>& members, const TreePoset& poset,
                       Mask extra) {
    std::vector<Mask> fam(members);
    fam.push_back(extra);
    if ((int)fam.size() < poset.node_count()) return false;
    auto cand = subtree_candidates(fam, poset);
    bool any_root = false;
    for (std::size_t f = 0; f < fam.size() && !any_root; ++f)
        any_root = bitset_get(cand[0], f);
    if (!any_root) return false;  // not even a relaxed (non-injective) embedding
    std::size_t extra_idx = fam.size() - 1;
    for (int u = 0; u < poset.node_count(); ++u) {
        if (!bitset_get(cand[u], extra_idx)) continue;
        EmbedSearch search{fam, poset, cand, {}, {}, u, extra_idx};
        if (search.run()) return true;
    }
    return false;
}

std::pair<SetFamily, SetFamily> peel_roots(const SetFamily& family, const TreePoset& poset) {
    std::vector<Mask> residual = family.members();
    std::vector<Mask> removed;
    for (;;) {
        SetFamily cur(family.ground(), residual);
        auto emb = contains_poset(cur, poset);
        if (!emb) break;
        Mask root_image = emb->assignment[0];
        removed.push_back(root_image);
        residual = cur.members();
        residual.erase(std::find(residual.begin(), residual.end(), root_image));
    }
    return {SetFamily(family.ground(), std::move(removed)),
            SetFamily(family.ground(), std::move(residual))};
}

Chain descend_chain_avoiding(const Embedding& embedding, const TreePoset& poset,
                             Mask forbidden) {
    if ((int)embedding.assignment.size() != poset.node_count())
        throw Error("descend_chain_avoiding: embedding does not match the poset");
    std::vector<Mask> top_down;
    int u = 0;
    top_down.push_back(embedding.assignment[0]);
    while (!poset.children(u).empty()) {
        std::vector<int> kids = poset.children(u);
        std::sort(kids.begin(), kids.end(), [&](int a, int b) {
            return canonical_less(embedding.assignment[a], embedding.assignment[b]);
        });
        int next = -1;
        for (int c : kids) {
            Mask child_set = embedding.assignment[c];
            if (!proper_subset_of(child_set, embedding.assignment[u]))
                throw Error("descend_chain_avoiding: embedding violates containment");
            Mask diff = embedding.assignment[u] & ~child_set;
            if (diff & ~forbidden) {  // difference survives outside `forbidden`
                next = c;
                break;
            }
        }
        if (next == -1)
            throw PigeonholeError("descend_chain_avoiding: every child difference lies in the forbidden set");
        u = next;
        top_down.push_back(embedding.assignment[u]);
    }
    std::reverse(top_down.begin(), top_down.end());
    return Chain{std::move(top_down)};
}

}  // namespace sperner
