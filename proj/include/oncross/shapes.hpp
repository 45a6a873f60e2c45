#pragma once

/// Rooted binary trees with positional (left/right) children, used both for
/// bare shapes and for interval-labeled trees.  Subordination, isomorphism
/// and mirror reflection are all positional; each consuming module fixes
/// which position is the son.

#include <cstdint>
#include <vector>

#include "oncross/errors.hpp"

namespace oncross {

struct BinTree {
    struct Node {
        int left = -1;
        int right = -1;
        int lo = 0;  // optional interval label
        int hi = 0;
    };

    std::vector<Node> nodes;
    int root = -1;

    bool empty() const { return root < 0; }
    int size() const { return static_cast<int>(nodes.size()); }
    bool is_leaf(int v) const { return nodes[static_cast<size_t>(v)].left < 0 && nodes[static_cast<size_t>(v)].right < 0; }
    bool is_full() const;
    int leaf_count() const;
    int add(Node node);
};

// Root-to-root homomorphism preserving parent-child relations and genders;
// such a map is unique when it exists, so this is a prefix test.  The empty
// tree subordinates every tree.
bool subordinates(const BinTree& a, const BinTree& b);
// Same test between subtrees rooted at `ra` and `rb` (-1 means empty).
bool subordinates_at(const BinTree& a, int ra, const BinTree& b, int rb);

bool shape_equal(const BinTree& a, const BinTree& b);
BinTree mirror_shape(const BinTree& t);

// Every binary tree shape with n nodes, in the deterministic order
// (left-subtree size ascending, then recursively).  Catalan(n) shapes.
std::vector<BinTree> enumerate_shapes(int n, int guard = 12);

// Every full binary tree shape with k leaves; Catalan(k-1) shapes.
std::vector<BinTree> enumerate_full_shapes(int leaves, int guard = 12);

// Deterministic pseudo-random shape, for property tests.
BinTree random_shape(int n, std::uint64_t seed);

}  // namespace oncross
