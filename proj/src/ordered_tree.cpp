#include "oncross/ordered_tree.hpp"

#include <algorithm>
#include <string>

namespace oncross {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw domain_error(msg);
}

}  // namespace

int OrderedTree::at(const std::vector<int>& v, int label) const {
    require(1 <= label && label <= n_, "ordered tree: label outside 1..n");
    return v[static_cast<size_t>(label - 1)];
}

OrderedTree::OrderedTree(int n, int root, const std::vector<TreeNodeSpec>& nodes) {
    require(n >= 1, "ordered tree: n must be positive");
    require(1 <= root && root <= n, "ordered tree: root outside 1..n");
    n_ = n;
    root_ = root;
    parent_.assign(static_cast<size_t>(n), 0);
    son_.assign(static_cast<size_t>(n), 0);
    daughter_.assign(static_cast<size_t>(n), 0);
    for (const auto& spec : nodes) {
        require(1 <= spec.label && spec.label <= n, "ordered tree: node label outside 1..n");
        if (spec.son) son_[static_cast<size_t>(spec.label - 1)] = *spec.son;
        if (spec.daughter) daughter_[static_cast<size_t>(spec.label - 1)] = *spec.daughter;
    }
    finish_build();
}

void OrderedTree::finish_build() {
    level_.assign(static_cast<size_t>(n_), -1);
    // In-order traversal from the root must visit exactly 1, 2, ..., n; this
    // pins connectivity, the strict BST property and the parent map at once.
    int expected = 1;
    auto walk = [&](auto&& self, int v, int lvl) -> void {
        require(1 <= v && v <= n_, "ordered tree: child label outside 1..n");
        require(level_[static_cast<size_t>(v - 1)] == -1, "ordered tree: vertex revisited");
        level_[static_cast<size_t>(v - 1)] = lvl;
        int s = son_[static_cast<size_t>(v - 1)];
        if (s != 0) {
            parent_[static_cast<size_t>(s - 1)] = v;
            self(self, s, lvl + 1);
        }
        require(v == expected, "ordered tree: labels violate the strict BST property");
        ++expected;
        int d = daughter_[static_cast<size_t>(v - 1)];
        if (d != 0) {
            parent_[static_cast<size_t>(d - 1)] = v;
            self(self, d, lvl + 1);
        }
    };
    walk(walk, root_, 0);
    require(expected == n_ + 1, "ordered tree: not all labels reached from the root");
    parent_[static_cast<size_t>(root_ - 1)] = 0;
}

OrderedTree OrderedTree::from_shape(const BinTree& shape) {
    require(!shape.empty(), "from_shape: empty shape");
    const int n = shape.size();
    OrderedTree t;
    t.n_ = n;
    t.parent_.assign(static_cast<size_t>(n), 0);
    t.son_.assign(static_cast<size_t>(n), 0);
    t.daughter_.assign(static_cast<size_t>(n), 0);
    int next = 1;
    auto walk = [&](auto&& self, int v) -> int {
        const auto& nd = shape.nodes[static_cast<size_t>(v)];
        int s = nd.left >= 0 ? self(self, nd.left) : 0;
        int label = next++;
        int d = nd.right >= 0 ? self(self, nd.right) : 0;
        t.son_[static_cast<size_t>(label - 1)] = s;
        t.daughter_[static_cast<size_t>(label - 1)] = d;
        return label;
    };
    t.root_ = walk(walk, shape.root);
    t.finish_build();
    return t;
}

int OrderedTree::depth() const {
    return *std::max_element(level_.begin(), level_.end());
}

Bounds OrderedTree::canonical_bounds(int v) const {
    require(1 <= v && v <= n_, "canonical_bounds: label outside 1..n");
    Bounds b{1, n_};
    int cur = root_;
    while (cur != v) {
        if (v < cur) {
            b.high = cur;
            cur = son(cur);
        } else {
            b.low = cur;
            cur = daughter(cur);
        }
        require(cur != 0, "canonical_bounds: vertex unreachable");
    }
    return b;
}

std::vector<int> OrderedTree::omega(int v) const {
    std::vector<int> path;
    for (int cur = v; cur != 0; cur = parent(cur)) path.push_back(cur);
    return path;
}

bool OrderedTree::on_path(int a, int of) const {
    for (int cur = of; cur != 0; cur = parent(cur))
        if (cur == a) return true;
    return false;
}

BinTree OrderedTree::shape() const {
    BinTree out;
    auto walk = [&](auto&& self, int v) -> int {
        BinTree::Node nd;
        nd.left = son(v) != 0 ? self(self, son(v)) : -1;
        nd.right = daughter(v) != 0 ? self(self, daughter(v)) : -1;
        nd.lo = nd.hi = v;
        return out.add(nd);
    };
    out.root = walk(walk, root_);
    return out;
}

OrderedTree OrderedTree::mirror() const {
    std::vector<TreeNodeSpec> specs;
    for (int v = 1; v <= n_; ++v) {
        TreeNodeSpec spec;
        spec.label = n_ + 1 - v;
        if (daughter(v) != 0) spec.son = n_ + 1 - daughter(v);
        if (son(v) != 0) spec.daughter = n_ + 1 - son(v);
        specs.push_back(spec);
    }
    return OrderedTree(n_, n_ + 1 - root_, specs);
}

OrderedTree OrderedTree::extract_interval(int lo, int hi) const {
    require(1 <= lo && lo <= hi && hi <= n_, "extract_interval: bad interval");
    int top = lo;
    for (int v = lo; v <= hi; ++v)
        if (level(v) < level(top)) top = v;
    std::vector<TreeNodeSpec> specs;
    for (int v = lo; v <= hi; ++v) {
        TreeNodeSpec spec;
        spec.label = v - lo + 1;
        if (int s = son(v); s != 0 && lo <= s && s <= hi) spec.son = s - lo + 1;
        if (int d = daughter(v); d != 0 && lo <= d && d <= hi) spec.daughter = d - lo + 1;
        specs.push_back(spec);
    }
    return OrderedTree(hi - lo + 1, top - lo + 1, specs);
}

Diagram diagram(const OrderedTree& t) {
    Diagram d;
    d.n = t.n();
    d.level.resize(static_cast<size_t>(t.n()));
    for (int v = 1; v <= t.n(); ++v) d.level[static_cast<size_t>(v - 1)] = t.level(v);
    return d;
}

OrderedTree tree_from_diagram(const Diagram& d) {
    const int n = d.n;
    if (n < 1 || static_cast<int>(d.level.size()) != n)
        throw domain_error("tree_from_diagram: bad diagram");
    std::vector<int> order(static_cast<size_t>(n));
    for (int v = 1; v <= n; ++v) order[static_cast<size_t>(v - 1)] = v;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return d.level[static_cast<size_t>(a - 1)] < d.level[static_cast<size_t>(b - 1)]; });
    if (d.level[static_cast<size_t>(order[0] - 1)] != 0 ||
        (n > 1 && d.level[static_cast<size_t>(order[1] - 1)] == 0))
        throw domain_error("tree_from_diagram: exactly one vertex must sit at level 0");
    std::vector<int> son(static_cast<size_t>(n), 0), daughter(static_cast<size_t>(n), 0),
        depth(static_cast<size_t>(n), 0);
    int root = order[0];
    for (size_t i = 1; i < order.size(); ++i) {
        int v = order[i];
        int cur = root;
        // BST insertion; the level sequence is valid iff every vertex lands
        // at its stated level.
        while (true) {
            int& slot = v < cur ? son[static_cast<size_t>(cur - 1)] : daughter[static_cast<size_t>(cur - 1)];
            if (slot == 0) {
                slot = v;
                depth[static_cast<size_t>(v - 1)] = depth[static_cast<size_t>(cur - 1)] + 1;
                break;
            }
            cur = slot;
        }
        if (depth[static_cast<size_t>(v - 1)] != d.level[static_cast<size_t>(v - 1)])
            throw domain_error("tree_from_diagram: levels do not describe an order-preserving tree");
    }
    std::vector<TreeNodeSpec> specs;
    for (int v = 1; v <= n; ++v) {
        TreeNodeSpec spec;
        spec.label = v;
        if (son[static_cast<size_t>(v - 1)] != 0) spec.son = son[static_cast<size_t>(v - 1)];
        if (daughter[static_cast<size_t>(v - 1)] != 0) spec.daughter = daughter[static_cast<size_t>(v - 1)];
        specs.push_back(spec);
    }
    return OrderedTree(n, root, specs);
}

std::vector<OrderedTree> enumerate_ordered_trees(int n, int guard) {
    std::vector<OrderedTree> out;
    for (const auto& shape : enumerate_shapes(n, guard)) out.push_back(OrderedTree::from_shape(shape));
    return out;
}

std::vector<int> skeleton(const OrderedTree& t) {
    std::vector<int> sk = t.omega(1);
    for (int v : t.omega(t.n())) sk.push_back(v);
    std::sort(sk.begin(), sk.end());
    sk.erase(std::unique(sk.begin(), sk.end()), sk.end());
    return sk;
}

bool is_elementary(const OrderedTree& t) {
    if (t.n() < 2) return false;
    if (t.root() == 1) return t.daughter(1) == t.n();
    if (t.root() == t.n()) return t.son(t.n()) == 1;
    return false;
}

std::vector<ElementaryComponent> elementary_decomposition(const OrderedTree& t) {
    std::vector<ElementaryComponent> out;
    for (int a : skeleton(t)) {
        if (a == t.root()) continue;
        int lo = std::min(a, t.parent(a));
        int hi = std::max(a, t.parent(a));
        out.push_back(ElementaryComponent{a, lo, hi, t.extract_interval(lo, hi)});
    }
    std::sort(out.begin(), out.end(),
              [](const ElementaryComponent& x, const ElementaryComponent& y) { return x.lo < y.lo; });
    return out;
}

}  // namespace oncross
