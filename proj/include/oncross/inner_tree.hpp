#pragma once

/// Inner trees: the full binary tree of gap-cell intervals of an
/// order-preserving tree, obtained by splitting each interval at the highest
/// interior vertex.  Cell i' sits between points i and i+1, so a tree on n
/// points has n-1 cells.  In an inner tree the left part of a split is the
/// daughter and the right part is the son; positional subordination agrees
/// with gender-preserving subordination.

#include <vector>

#include "oncross/ordered_tree.hpp"

namespace oncross {

// Interval labels are cell indices: node [lo, hi] covers cells lo'..hi'.
// Empty when n = 1 (no cells).
struct InnerTree {
    BinTree tree;

    bool empty() const { return tree.empty(); }
    bool operator==(const InnerTree& other) const { return shape_equal(tree, other.tree); }
};

InnerTree inner_tree(const OrderedTree& t);

// Subtrees of the inner tree at a vertex's canonical-bound intervals:
// left covers cells [a, x-1], right covers [x, b-1].  Empty when x = 1
// (left) or x = n (right).
InnerTree left_inner(const OrderedTree& t, int x);
InnerTree right_inner(const OrderedTree& t, int x);

// Decreasing test over comparable non-root pairs x strictly below y:
//   both on omega(1)  -> right inner tree of x subordinates that of y,
//   both on omega(n)  -> left inner tree of x subordinates that of y,
//   both on neither   -> both subordinations.
// Mixed-membership pairs impose no constraint.
bool is_decreasing(const OrderedTree& t);

// All decreasing trees on n vertices, deterministic shape order.
std::vector<OrderedTree> enumerate_decreasing(int n, int guard = 12);

}  // namespace oncross
