#include "oncross/shapes.hpp"

#include <random>
#include <string>

namespace oncross {

bool BinTree::is_full() const {
    for (const auto& nd : nodes) {
        bool l = nd.left >= 0, r = nd.right >= 0;
        if (l != r) return false;
    }
    return true;
}

int BinTree::leaf_count() const {
    if (empty()) return 0;
    int count = 0;
    for (int v = 0; v < size(); ++v)
        if (is_leaf(v)) ++count;
    return count;
}

int BinTree::add(Node node) {
    nodes.push_back(node);
    return static_cast<int>(nodes.size()) - 1;
}

bool subordinates_at(const BinTree& a, int ra, const BinTree& b, int rb) {
    if (ra < 0) return true;
    if (rb < 0) return false;
    const auto& na = a.nodes[static_cast<size_t>(ra)];
    const auto& nb = b.nodes[static_cast<size_t>(rb)];
    return subordinates_at(a, na.left, b, nb.left) && subordinates_at(a, na.right, b, nb.right);
}

bool subordinates(const BinTree& a, const BinTree& b) {
    return subordinates_at(a, a.root, b, b.root);
}

namespace {

bool shape_equal_at(const BinTree& a, int ra, const BinTree& b, int rb) {
    if (ra < 0 || rb < 0) return ra < 0 && rb < 0;
    const auto& na = a.nodes[static_cast<size_t>(ra)];
    const auto& nb = b.nodes[static_cast<size_t>(rb)];
    return shape_equal_at(a, na.left, b, nb.left) && shape_equal_at(a, na.right, b, nb.right);
}

int mirror_at(const BinTree& src, int v, BinTree& dst) {
    if (v < 0) return -1;
    const auto& nd = src.nodes[static_cast<size_t>(v)];
    BinTree::Node out;
    out.left = mirror_at(src, nd.right, dst);
    out.right = mirror_at(src, nd.left, dst);
    out.lo = nd.lo;
    out.hi = nd.hi;
    return dst.add(out);
}

}  // namespace

bool shape_equal(const BinTree& a, const BinTree& b) {
    return shape_equal_at(a, a.root, b, b.root);
}

BinTree mirror_shape(const BinTree& t) {
    BinTree out;
    out.root = mirror_at(t, t.root, out);
    return out;
}

namespace {

// Appends a copy of src's subtree at v into dst, returning the new index.
int graft(const BinTree& src, int v, BinTree& dst) {
    if (v < 0) return -1;
    const auto& nd = src.nodes[static_cast<size_t>(v)];
    BinTree::Node out;
    out.left = graft(src, nd.left, dst);
    out.right = graft(src, nd.right, dst);
    out.lo = nd.lo;
    out.hi = nd.hi;
    return dst.add(out);
}

std::vector<BinTree> shapes_memo(int n, std::vector<std::vector<BinTree>>& memo) {
    if (!memo[static_cast<size_t>(n)].empty() || n == 0) return memo[static_cast<size_t>(n)];
    std::vector<BinTree> out;
    if (n == 0) return out;
    for (int left = 0; left <= n - 1; ++left) {
        int right = n - 1 - left;
        auto ls = shapes_memo(left, memo);
        auto rs = shapes_memo(right, memo);
        auto combine = [&](const BinTree* l, const BinTree* r) {
            BinTree t;
            BinTree::Node root_node;
            root_node.left = l ? graft(*l, l->root, t) : -1;
            root_node.right = r ? graft(*r, r->root, t) : -1;
            t.root = t.add(root_node);
            out.push_back(std::move(t));
        };
        if (left == 0 && right == 0) {
            combine(nullptr, nullptr);
        } else if (left == 0) {
            for (const auto& r : rs) combine(nullptr, &r);
        } else if (right == 0) {
            for (const auto& l : ls) combine(&l, nullptr);
        } else {
            for (const auto& l : ls)
                for (const auto& r : rs) combine(&l, &r);
        }
    }
    memo[static_cast<size_t>(n)] = std::move(out);
    return memo[static_cast<size_t>(n)];
}

}  // namespace

std::vector<BinTree> enumerate_shapes(int n, int guard) {
    if (n < 0 || n > guard)
        throw guard_error("shape enumeration refused: n=" + std::to_string(n) +
                          " exceeds guard " + std::to_string(guard));
    if (n == 0) return {};
    std::vector<std::vector<BinTree>> memo(static_cast<size_t>(n) + 1);
    return shapes_memo(n, memo);
}

std::vector<BinTree> enumerate_full_shapes(int leaves, int guard) {
    if (leaves < 1 || leaves > guard)
        throw guard_error("full shape enumeration refused: leaves=" + std::to_string(leaves) +
                          " outside 1.." + std::to_string(guard));
    // Direct recursion on the left leaf count; Catalan(leaves - 1) shapes.
    std::vector<std::vector<BinTree>> memo(static_cast<size_t>(leaves) + 1);
    {
        BinTree leaf;
        leaf.root = leaf.add({});
        memo[1].push_back(std::move(leaf));
    }
    for (int k = 2; k <= leaves; ++k)
        for (int left = 1; left < k; ++left)
            for (const auto& l : memo[static_cast<size_t>(left)])
                for (const auto& r : memo[static_cast<size_t>(k - left)]) {
                    BinTree t;
                    BinTree::Node root_node;
                    root_node.left = graft(l, l.root, t);
                    root_node.right = graft(r, r.root, t);
                    t.root = t.add(root_node);
                    memo[static_cast<size_t>(k)].push_back(std::move(t));
                }
    return memo[static_cast<size_t>(leaves)];
}

BinTree random_shape(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto rec = [&](auto&& self, int count, BinTree& t) -> int {
        if (count == 0) return -1;
        std::uniform_int_distribution<int> dist(0, count - 1);
        int left = dist(rng);
        BinTree::Node nd;
        nd.left = self(self, left, t);
        nd.right = self(self, count - 1 - left, t);
        return t.add(nd);
    };
    BinTree t;
    t.root = rec(rec, n, t);
    return t;
}

}  // namespace oncross
