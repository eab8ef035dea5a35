#ifndef SPERNER_POSET_HPP
#define SPERNER_POSET_HPP

#include <optional>
#include <utility>
#include <vector>

#include "sperner/family.hpp"

namespace sperner {

// Finite poset whose Hasse graph is a tree with a unique maximum (the root).
// Nodes are labeled in breadth-first order from the root: node 0 is the root
// and levels are contiguous. Arbitrary parent labelings are accepted and
// relabeled on construction.
class TreePoset {
public:
    // parent[0] must be -1; parent[i] is the node directly above i.
    explicit TreePoset(std::vector<int> parent);

    int node_count() const { return (int)parent_.size(); }
    int root() const { return 0; }
    int parent(int node) const { return parent_[node]; }
    const std::vector<int>& children(int node) const { return children_[node]; }
    int level(int node) const { return level_[node]; }
    int height() const { return height_; }
    const std::vector<int>& parents() const { return parent_; }

    // True when every non-leaf has the same child count and all leaves sit on
    // the bottom level.
    bool is_complete_tree() const;
    bool is_chain() const;

private:
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
    std::vector<int> level_;
    int height_ = 0;
};

// Chain poset of k nodes.
TreePoset build_chain_poset(int k);

// Complete c-ary tree of height h (h levels, every non-leaf has exactly c
// children). Throws CapacityError if the node count would exceed the cap.
TreePoset build_complete_tree_poset(int h, int c, long long node_cap = 1000000);

// (height, level number): the longest root-to-leaf node count and the largest
// number of consecutive full levels of a subset lattice that never host the
// poset, which for tree posets is height - 1.
std::pair<int, int> height_and_level_count(const TreePoset& poset);

// Injective assignment of family members to poset nodes such that a node's
// set strictly contains each child's set.
struct Embedding {
    std::vector<Mask> assignment;  // indexed by poset node
};

// First embedding in depth-first canonical order (nodes in BFS order,
// candidates in canonical member order); nullopt iff the family is P-free.
std::optional<Embedding> contains_poset(const SetFamily& family, const TreePoset& poset);

// Incremental form for search loops: given a P-free member list, does adding
// `extra` create an embedding? Only embeddings through `extra` are searched.
bool embeds_with_extra(const std::vector<Mask>& members, const TreePoset& poset, Mask extra);

// Repeatedly find an embedding and remove the root's image until none
// remains. Returns (removed, residual); the residual is P-free.
std::pair<SetFamily, SetFamily> peel_roots(const SetFamily& family, const TreePoset& poset);

// Root-to-leaf chain through the embedding, choosing at every level the
// canonically first child whose difference from its parent is not contained
// in `forbidden`. Returned in ascending (inclusion) order. Such a child always
// exists when the branching factor is at least 2^|forbidden|; otherwise a
// PigeonholeError may be thrown.
Chain descend_chain_avoiding(const Embedding& embedding, const TreePoset& poset,
                             Mask forbidden);

}  // namespace sperner

#endif
