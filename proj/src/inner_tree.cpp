#include "oncross/inner_tree.hpp"

#include <algorithm>

namespace oncross {

namespace {

// Copies the subtree of src rooted at v into a fresh tree.
InnerTree subtree_copy(const BinTree& src, int v) {
    InnerTree out;
    if (v < 0) return out;
    auto walk = [&](auto&& self, int u) -> int {
        const auto& nd = src.nodes[static_cast<size_t>(u)];
        BinTree::Node copy;
        copy.left = nd.left >= 0 ? self(self, nd.left) : -1;
        copy.right = nd.right >= 0 ? self(self, nd.right) : -1;
        copy.lo = nd.lo;
        copy.hi = nd.hi;
        return out.tree.add(copy);
    };
    out.tree.root = walk(walk, v);
    return out;
}

int find_interval(const BinTree& t, int lo, int hi) {
    for (int v = 0; v < t.size(); ++v)
        if (t.nodes[static_cast<size_t>(v)].lo == lo && t.nodes[static_cast<size_t>(v)].hi == hi) return v;
    return -1;
}

}  // namespace

InnerTree inner_tree(const OrderedTree& t) {
    InnerTree out;
    const int n = t.n();
    if (n < 2) return out;  // no cells, empty by convention
    // Split [lo, hi] (cells) at the highest point x with lo < x <= hi:
    // daughter/left [lo, x-1], son/right [x, hi].
    auto build = [&](auto&& self, int lo, int hi) -> int {
        BinTree::Node nd;
        nd.lo = lo;
        nd.hi = hi;
        if (lo < hi) {
            int x = lo + 1;
            for (int cand = lo + 1; cand <= hi; ++cand)
                if (t.level(cand) < t.level(x)) x = cand;
            nd.left = self(self, lo, x - 1);
            nd.right = self(self, x, hi);
        }
        return out.tree.add(nd);
    };
    out.tree.root = build(build, 1, n - 1);
    return out;
}

InnerTree left_inner(const OrderedTree& t, int x) {
    if (x == 1) return {};
    Bounds b = t.canonical_bounds(x);
    InnerTree gamma = inner_tree(t);
    int node = find_interval(gamma.tree, b.low, x - 1);
    if (node < 0) throw domain_error("left_inner: bound interval missing from the inner tree");
    return subtree_copy(gamma.tree, node);
}

InnerTree right_inner(const OrderedTree& t, int x) {
    if (x == t.n()) return {};
    Bounds b = t.canonical_bounds(x);
    InnerTree gamma = inner_tree(t);
    int node = find_interval(gamma.tree, x, b.high - 1);
    if (node < 0) throw domain_error("right_inner: bound interval missing from the inner tree");
    return subtree_copy(gamma.tree, node);
}

bool is_decreasing(const OrderedTree& t) {
    const int n = t.n();
    if (n <= 2) return true;
    InnerTree gamma = inner_tree(t);
    // Locate each vertex's bound intervals inside the one shared inner tree
    // instead of copying subtrees per pair.
    auto left_node = [&](int x) -> int {
        if (x == 1) return -1;
        Bounds b = t.canonical_bounds(x);
        int v = find_interval(gamma.tree, b.low, x - 1);
        if (v < 0) throw domain_error("is_decreasing: bound interval missing from the inner tree");
        return v;
    };
    auto right_node = [&](int x) -> int {
        if (x == n) return -1;
        Bounds b = t.canonical_bounds(x);
        int v = find_interval(gamma.tree, x, b.high - 1);
        if (v < 0) throw domain_error("is_decreasing: bound interval missing from the inner tree");
        return v;
    };
    std::vector<char> on_w1(static_cast<size_t>(n) + 1, 0), on_wn(static_cast<size_t>(n) + 1, 0);
    for (int v : t.omega(1)) on_w1[static_cast<size_t>(v)] = 1;
    for (int v : t.omega(n)) on_wn[static_cast<size_t>(v)] = 1;

    // Enumerate comparable pairs: x strictly below y, both non-root.
    for (int x = 1; x <= n; ++x) {
        if (x == t.root()) continue;
        for (int y = t.parent(x); y != 0 && y != t.root(); y = t.parent(y)) {
            bool x1 = on_w1[static_cast<size_t>(x)], y1 = on_w1[static_cast<size_t>(y)];
            bool xn = on_wn[static_cast<size_t>(x)], yn = on_wn[static_cast<size_t>(y)];
            if (x1 && y1) {
                if (!subordinates_at(gamma.tree, right_node(x), gamma.tree, right_node(y)))
                    return false;
            } else if (xn && yn) {
                if (!subordinates_at(gamma.tree, left_node(x), gamma.tree, left_node(y)))
                    return false;
            } else if (!x1 && !xn && !y1 && !yn) {
                if (!subordinates_at(gamma.tree, left_node(x), gamma.tree, left_node(y)))
                    return false;
                if (!subordinates_at(gamma.tree, right_node(x), gamma.tree, right_node(y)))
                    return false;
            }
        }
    }
    return true;
}

std::vector<OrderedTree> enumerate_decreasing(int n, int guard) {
    std::vector<OrderedTree> out;
    for (auto& t : enumerate_ordered_trees(n, guard))
        if (is_decreasing(t)) out.push_back(std::move(t));
    return out;
}

}  // namespace oncross
