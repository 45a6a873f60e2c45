#include "oncross/l_section.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace oncross {

RespectfulTree respectful_from_shape(const BinTree& shape) {
    if (!shape.is_full()) throw domain_error("respectful tree: shape is not full");
    return RespectfulTree{shape, {}};
}

namespace {

int leaf_count_at(const BinTree& t, int v) {
    if (v < 0) return 0;
    if (t.is_leaf(v)) return 1;
    const auto& nd = t.nodes[static_cast<size_t>(v)];
    return leaf_count_at(t, nd.left) + leaf_count_at(t, nd.right);
}

}  // namespace

bool is_respectful(const RespectfulTree& g, bool direct_s1s2) {
    const BinTree& t = g.tree;
    if (t.empty()) throw domain_error("is_respectful: empty tree");
    if (!t.is_full()) throw domain_error("is_respectful: tree is not full");
    if (!direct_s1s2) {
        // Equivalent single-condition form: each child subordinates its parent.
        bool ok = true;
        auto walk = [&](auto&& self, int v) -> void {
            if (!ok || t.is_leaf(v)) return;
            const auto& nd = t.nodes[static_cast<size_t>(v)];
            if (!subordinates_at(t, nd.left, t, v) || !subordinates_at(t, nd.right, t, v)) {
                ok = false;
                return;
            }
            self(self, nd.left);
            self(self, nd.right);
        };
        walk(walk, t.root);
        return ok;
    }
    // (S1) a nephew subordinates his uncle; (S2) a niece subordinates her aunt.
    bool ok = true;
    auto walk = [&](auto&& self, int v) -> void {
        if (!ok || t.is_leaf(v)) return;
        const auto& nd = t.nodes[static_cast<size_t>(v)];
        int son = nd.left, dau = nd.right;
        if (!t.is_leaf(dau)) {
            int nephew = t.nodes[static_cast<size_t>(dau)].left;
            if (!subordinates_at(t, nephew, t, son)) ok = false;
        }
        if (!t.is_leaf(son)) {
            int niece = t.nodes[static_cast<size_t>(son)].right;
            if (!subordinates_at(t, niece, t, dau)) ok = false;
        }
        self(self, son);
        self(self, dau);
    };
    walk(walk, t.root);
    return ok;
}

RespectfulTree faithful_marking(const RespectfulTree& g, std::vector<int> order) {
    RespectfulTree out = g;
    const int n = g.leaves();
    if (order.empty()) {
        order.resize(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 1);
    }
    if (static_cast<int>(order.size()) != n)
        throw domain_error("faithful_marking: order length != leaf count");
    {
        std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
        for (int u : order) {
            if (u < 1 || u > n || seen[static_cast<size_t>(u)])
                throw domain_error("faithful_marking: order is not a permutation of 1..n");
            seen[static_cast<size_t>(u)] = 1;
        }
    }
    // Intervals are positional in the order; the split is forced by leaf counts.
    auto mark = [&](auto&& self, int v, int lo, int hi) -> void {
        auto& nd = out.tree.nodes[static_cast<size_t>(v)];
        nd.lo = lo;
        nd.hi = hi;
        if (out.tree.is_leaf(v)) return;
        int left_leaves = leaf_count_at(out.tree, nd.left);
        self(self, nd.left, lo, lo + left_leaves - 1);
        self(self, nd.right, lo + left_leaves, hi);
    };
    mark(mark, out.tree.root, 1, n);
    out.order = std::move(order);
    return out;
}

namespace {

std::vector<int> positions_of(const RespectfulTree& g, const std::vector<int>& points) {
    const int n = g.leaves();
    std::vector<int> pos_of_point(static_cast<size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) pos_of_point[static_cast<size_t>(g.order[static_cast<size_t>(i)])] = i + 1;
    std::vector<int> out;
    for (int p : points) {
        if (p < 1 || p > n) throw domain_error("alpha/hull: point outside 1..n");
        out.push_back(pos_of_point[static_cast<size_t>(p)]);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int hull_positions(const RespectfulTree& g, int lo_pos, int hi_pos) {
    int v = g.tree.root;
    while (!g.tree.is_leaf(v)) {
        const auto& nd = g.tree.nodes[static_cast<size_t>(v)];
        const auto& l = g.tree.nodes[static_cast<size_t>(nd.left)];
        const auto& r = g.tree.nodes[static_cast<size_t>(nd.right)];
        if (l.lo <= lo_pos && hi_pos <= l.hi)
            v = nd.left;
        else if (r.lo <= lo_pos && hi_pos <= r.hi)
            v = nd.right;
        else
            break;
    }
    return v;
}

}  // namespace

int hull(const RespectfulTree& g, const std::vector<int>& m_points) {
    if (!g.marked()) throw domain_error("hull: tree is not marked");
    if (m_points.empty()) throw domain_error("hull: empty point set");
    auto pos = positions_of(g, m_points);
    return hull_positions(g, pos.front(), pos.back());
}

Transformation alpha(const RespectfulTree& g, const std::vector<int>& m_points) {
    if (!g.marked()) throw domain_error("alpha: tree is not marked");
    if (m_points.empty()) throw domain_error("alpha: empty image set");
    const int n = g.leaves();
    const BinTree& t = g.tree;
    std::vector<int> result_pos(static_cast<size_t>(n) + 1, 0);  // position -> position
    // Case (a): empty domain contributes nothing.  Case (b): a singleton
    // target absorbs all of A.  Case (c): split both the domain A and the
    // hull B of the target, and recurse on matching sides.
    auto rec = [&](auto&& self, int a, const std::vector<int>& m) -> void {
        if (a < 0) return;
        if (m.empty())
            throw domain_error("alpha: empty target on a nonempty domain; tree is not respectful");
        const auto& nd = t.nodes[static_cast<size_t>(a)];
        if (m.size() == 1) {
            for (int p = nd.lo; p <= nd.hi; ++p) result_pos[static_cast<size_t>(p)] = m[0];
            return;
        }
        int b = hull_positions(g, m.front(), m.back());
        const auto& nb = t.nodes[static_cast<size_t>(b)];
        if (t.is_leaf(b)) throw domain_error("alpha: hull of a multi-point target is a leaf");
        const auto& bs = t.nodes[static_cast<size_t>(nb.left)];
        std::vector<int> ms, md;
        for (int p : m) (p <= bs.hi ? ms : md).push_back(p);
        self(self, t.is_leaf(a) ? -1 : nd.left, ms);
        self(self, t.is_leaf(a) ? -1 : nd.right, md);
    };
    auto m_pos = positions_of(g, m_points);
    if (static_cast<int>(m_pos.size()) != static_cast<int>(m_points.size()))
        throw domain_error("alpha: repeated points in the image set");
    rec(rec, t.root, m_pos);
    std::vector<int> images(static_cast<size_t>(n), 0);
    for (int p = 1; p <= n; ++p) {
        if (result_pos[static_cast<size_t>(p)] == 0)
            throw domain_error("alpha: recursion left points unmapped; tree is not respectful");
        int point = g.order[static_cast<size_t>(p - 1)];
        int image = g.order[static_cast<size_t>(result_pos[static_cast<size_t>(p)] - 1)];
        images[static_cast<size_t>(point - 1)] = image;
    }
    return Transformation(n, std::move(images));
}

CrossSection l_cross_section(const RespectfulTree& g, std::vector<int> order) {
    if (!is_respectful(g)) throw domain_error("l_cross_section: tree is not respectful");
    const bool natural = order.empty();
    RespectfulTree marked = faithful_marking(g, std::move(order));
    const int n = marked.leaves();
    // 2^n - 1 elements and a quadratic closure validation.
    if (n > 12) throw guard_error("l_cross_section refused: more than 12 leaves");
    std::vector<Transformation> elems;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> m;
        for (int x = 1; x <= n; ++x)
            if (mask & (1u << (x - 1))) m.push_back(x);
        elems.push_back(alpha(marked, m));
    }
    CrossSection out(n, Green::L, std::move(elems));
    bool ok = natural ? is_cross_section(out) : is_tn_cross_section(out);
    if (!ok) throw domain_error("l_cross_section: output failed validation");
    return out;
}

std::vector<RespectfulTree> enumerate_respectful(int leaves, int guard) {
    std::vector<RespectfulTree> out;
    for (auto& shape : enumerate_full_shapes(leaves, guard)) {
        RespectfulTree g{std::move(shape), {}};
        if (is_respectful(g)) out.push_back(std::move(g));
    }
    return out;
}

namespace {

void pair_nodes(const BinTree& a, int va, const BinTree& b, int vb, bool swap,
                std::vector<int>& witness) {
    witness[static_cast<size_t>(va)] = vb;
    const auto& na = a.nodes[static_cast<size_t>(va)];
    const auto& nb = b.nodes[static_cast<size_t>(vb)];
    if (na.left >= 0) pair_nodes(a, na.left, b, swap ? nb.right : nb.left, swap, witness);
    if (na.right >= 0) pair_nodes(a, na.right, b, swap ? nb.left : nb.right, swap, witness);
}

}  // namespace

Similarity similar(const BinTree& g1, const BinTree& g2) {
    Similarity out;
    bool iso_ok = shape_equal(g1, g2);
    bool anti_ok = shape_equal(g1, mirror_shape(g2));
    if (iso_ok && anti_ok)
        out.verdict = SimilarityVerdict::both;
    else if (iso_ok)
        out.verdict = SimilarityVerdict::iso;
    else if (anti_ok)
        out.verdict = SimilarityVerdict::anti;
    if (iso_ok) {
        std::vector<int> w(static_cast<size_t>(g1.size()), -1);
        pair_nodes(g1, g1.root, g2, g2.root, false, w);
        out.iso_witness = std::move(w);
    }
    if (anti_ok) {
        std::vector<int> w(static_cast<size_t>(g1.size()), -1);
        pair_nodes(g1, g1.root, g2, g2.root, true, w);
        out.anti_witness = std::move(w);
    }
    return out;
}

Similarity similar(const RespectfulTree& g1, const RespectfulTree& g2) {
    return similar(g1.tree, g2.tree);
}

CrossSection dual_r_cross_section(const CrossSection& l_section, int fix) {
    if (l_section.relation != Green::L)
        throw domain_error("dual_r_cross_section: expected an L-cross-section");
    const int n = l_section.n;
    if (fix != 1 && fix != n + 1)
        throw domain_error("dual_r_cross_section: fix must be 1 or n+1");
    std::vector<Transformation> elems;
    for (const auto& a : l_section.elements) elems.push_back(higgins_dual(a));
    elems.push_back(Transformation::constant(n + 1, fix));
    CrossSection out(n + 1, Green::R, std::move(elems));
    // Closure comes from the dual being an anti-homomorphism, but the output
    // is re-validated independently so a regression upstream is caught here.
    if (!is_cross_section(out))
        throw domain_error("dual_r_cross_section: output failed validation");
    return out;
}

OrderedTree elementary_from_respectful(const RespectfulTree& g, int root_choice) {
    if (!is_respectful(g)) throw domain_error("elementary_from_respectful: tree is not respectful");
    const int k = g.leaves();
    const int n = k + 1;
    if (root_choice != 1 && root_choice != n)
        throw domain_error("elementary_from_respectful: root must be 1 or k+1");
    RespectfulTree marked = g.marked() ? g : faithful_marking(g);
    std::vector<int> son(static_cast<size_t>(n) + 1, 0), daughter(static_cast<size_t>(n) + 1, 0);
    // The split point of a cell interval becomes a tree vertex; the left
    // part continues on its son side, the right part on its daughter side.
    auto attach = [&](auto&& self, int a, int parent, bool as_son) -> void {
        if (marked.tree.is_leaf(a)) return;
        const auto& nd = marked.tree.nodes[static_cast<size_t>(a)];
        int x = marked.tree.nodes[static_cast<size_t>(nd.left)].hi + 1;
        (as_son ? son : daughter)[static_cast<size_t>(parent)] = x;
        self(self, nd.left, x, true);
        self(self, nd.right, x, false);
    };
    if (root_choice == 1) {
        daughter[1] = n;
        attach(attach, marked.tree.root, n, true);
    } else {
        son[static_cast<size_t>(n)] = 1;
        attach(attach, marked.tree.root, 1, false);
    }
    std::vector<TreeNodeSpec> specs;
    for (int v = 1; v <= n; ++v) {
        TreeNodeSpec spec;
        spec.label = v;
        if (son[static_cast<size_t>(v)] != 0) spec.son = son[static_cast<size_t>(v)];
        if (daughter[static_cast<size_t>(v)] != 0) spec.daughter = daughter[static_cast<size_t>(v)];
        specs.push_back(spec);
    }
    OrderedTree out(n, root_choice, specs);
    if (!is_elementary(out) || !is_decreasing(out))
        throw domain_error("elementary_from_respectful: construction is not elementary decreasing");
    if (!shape_equal(inner_tree(out).tree, g.tree))
        throw domain_error("elementary_from_respectful: inner tree mismatch");
    return out;
}

RespectfulTree respectful_from_elementary(const OrderedTree& t) {
    if (!is_elementary(t)) throw domain_error("respectful_from_elementary: tree is not elementary");
    RespectfulTree out{inner_tree(t).tree, {}};
    if (!is_respectful(out))
        throw domain_error("respectful_from_elementary: inner tree is not respectful");
    return out;
}

}  // namespace oncross
