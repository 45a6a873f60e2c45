#pragma once

/// Order-preserving trees: rooted binary trees on labels 1..n with the
/// strict BST property (left subtree below x holds labels < x, right subtree
/// labels > x).  Exactly one labeling exists per shape, so trees are stored
/// label-indexed for constant-time lookup.

#include <optional>
#include <vector>

#include "oncross/shapes.hpp"

namespace oncross {

struct Bounds {
    int low = 0;
    int high = 0;
    bool operator==(const Bounds&) const = default;
};

struct TreeNodeSpec {
    int label = 0;
    std::optional<int> son;
    std::optional<int> daughter;
};

class OrderedTree {
  public:
    // Builds from explicit structure; validates connectivity and the strict
    // BST property (son < vertex < daughter, intervals nested).
    OrderedTree(int n, int root, const std::vector<TreeNodeSpec>& nodes);

    // The unique order-preserving labeling of a shape (in-order).
    static OrderedTree from_shape(const BinTree& shape);

    int n() const { return n_; }
    int root() const { return root_; }
    int parent(int v) const { return at(parent_, v); }  // 0 when v is the root
    int son(int v) const { return at(son_, v); }        // 0 when absent
    int daughter(int v) const { return at(daughter_, v); }
    int level(int v) const { return at(level_, v); }
    int depth() const;

    Bounds canonical_bounds(int v) const;
    // The root path v, p(v), ..., rt.
    std::vector<int> omega(int v) const;
    // Whether a lies on the root path of b (a is an ancestor of b or b itself).
    bool on_path(int a, int of) const;

    BinTree shape() const;
    // Relabel x -> n+1-x and swap all son/daughter roles.
    OrderedTree mirror() const;
    // The induced subtree on the label interval [lo, hi]; requires that this
    // set is closed under taking children and has a unique top vertex.
    OrderedTree extract_interval(int lo, int hi) const;

    bool operator==(const OrderedTree&) const = default;

  private:
    OrderedTree() = default;
    int at(const std::vector<int>& v, int label) const;
    void finish_build();

    int n_ = 0;
    int root_ = 0;
    std::vector<int> parent_, son_, daughter_, level_;  // 1-based, 0 = none
};

// Levels of every vertex: level[v-1], root at level 0.  The diagram
// determines the tree completely.
struct Diagram {
    int n = 0;
    std::vector<int> level;
    bool operator==(const Diagram&) const = default;
};

Diagram diagram(const OrderedTree& t);
// Rebuilds the unique order-preserving tree with the given levels.
OrderedTree tree_from_diagram(const Diagram& d);

// Every order-preserving tree on n vertices (Catalan(n) of them),
// deterministic shape order.
std::vector<OrderedTree> enumerate_ordered_trees(int n, int guard = 12);

// Skeleton: the union of the root paths of 1 and n, sorted ascending.
std::vector<int> skeleton(const OrderedTree& t);

// U_0 and U_1 together are {x, p(x)} = {1, n}; everything else lies strictly
// between.  Whole-tree form: the root is 1 or n and its sole child is the
// other endpoint.
bool is_elementary(const OrderedTree& t);

struct ElementaryComponent {
    int anchor;  // the non-parent endpoint a of T^a
    int lo;      // spanned label interval [lo, hi]
    int hi;
    OrderedTree tree;  // relabeled to 1..(hi-lo+1)
};

// The minimal decomposition along the skeleton: one component T^a per
// skeleton vertex a != rt, ordered left to right.  Adjacent components share
// exactly one skeleton endpoint.
std::vector<ElementaryComponent> elementary_decomposition(const OrderedTree& t);

}  // namespace oncross
