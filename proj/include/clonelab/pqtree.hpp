#pragma once

#include "clonelab/set_family.hpp"

namespace clonelab {

/// Labeled PQ-tree of a clone structure. Leaves carry candidate ids
/// 0..m-1; P-node children may be permuted freely, Q-node children only
/// reversed. Q-nodes have at least three children (two-child internal
/// nodes are P-nodes by convention).
struct PQTree {
    enum class Kind { Leaf, P, Q };

    struct Node {
        Kind kind = Kind::Leaf;
        CandidateId candidate = -1;      // leaves only
        std::vector<int> children;       // ordered

        bool operator==(const Node&) const = default;
    };

    std::vector<Node> nodes;
    int root = -1;

    bool operator==(const PQTree&) const = default;

    int leaf_count() const;
    /// Sorted candidate ids under `node`.
    CandidateSet leaf_set(int node) const;
    /// Candidate ids in left-to-right (DFS) order.
    std::vector<CandidateId> frontier() const;
    void validate() const;

    /// Sorts P children by minimum leaf id and orients each Q node so its
    /// first child's minimum leaf id is smaller than its last child's.
    /// After canonicalization, equal clone structures give equal trees.
    void canonicalize();
};

/// Dec(C): the unique maximal collection of pairwise disjoint supports of
/// irreducible subfamilies, each of size >= 2. Minimal non-singleton sets
/// of size >= 3 are fat-sausage supports; pairs grow to the maximal string
/// of sausages containing them. Throws if f is not a clone structure.
std::vector<CandidateSet> decomposition(const SetFamily& f);

/// The labeled PQ-tree T(f) of a clone structure, canonicalized.
PQTree build_tree(const SetFamily& f);

/// All clone sets represented by the tree: each node's leaf set, plus the
/// union of every run of 1 < l < k consecutive children of each Q-node.
SetFamily tree_to_family(const PQTree& t);

/// Membership test that does not materialize the whole family.
bool is_clone_in_tree(const PQTree& t, const CandidateSet& x);

std::string tree_to_json(const PQTree& t, int indent = 2);
PQTree tree_from_json(const std::string& json_text);

/// Graphviz rendering; P nodes are circles, Q nodes boxes. `coloring`, if
/// given, fills each node (indexed as in t.nodes) black or white.
std::string tree_to_dot(const PQTree& t, const std::vector<bool>* black = nullptr);

}  // namespace clonelab
