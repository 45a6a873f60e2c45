#include <doctest.h>

#include <set>

#include "oncross/l_section.hpp"
#include "oncross/phi.hpp"
#include "test_util.hpp"

using namespace oncross;
using oncross::test::make_tree;
using oncross::test::tr;

namespace {

// Builders for full binary trees, leaves-first.
int leaf(BinTree& t) { return t.add({}); }
int fork(BinTree& t, int l, int r) {
    BinTree::Node nd;
    nd.left = l;
    nd.right = r;
    return t.add(nd);
}

// Eleven vertices: satisfies the nephew/uncle condition but not the
// niece/aunt one (the root's daughter is a leaf with an internal niece).
RespectfulTree sample_non_respectful() {
    BinTree t;
    int n5 = fork(t, leaf(t), fork(t, leaf(t), leaf(t)));
    int n8 = fork(t, leaf(t), leaf(t));
    int n9 = fork(t, n5, n8);
    t.root = fork(t, n9, leaf(t));
    return respectful_from_shape(t);
}

// Same tree with the root's daughter grown into a cherry: respectful.
RespectfulTree sample_respectful() {
    BinTree t;
    int n5 = fork(t, leaf(t), fork(t, leaf(t), leaf(t)));
    int n8 = fork(t, leaf(t), leaf(t));
    int n9 = fork(t, n5, n8);
    int n10 = fork(t, leaf(t), leaf(t));
    t.root = fork(t, n9, n10);
    return respectful_from_shape(t);
}

// The three-leaf reference tree: son [1], daughter ([2],[3]).
RespectfulTree reference_l3() {
    BinTree t;
    t.root = fork(t, leaf(t), fork(t, leaf(t), leaf(t)));
    return respectful_from_shape(t);
}

// A mirror pair of four-leaf combs.
RespectfulTree gamma1() {
    BinTree t;
    int n12 = fork(t, leaf(t), leaf(t));
    int n13 = fork(t, n12, leaf(t));
    t.root = fork(t, n13, leaf(t));
    return respectful_from_shape(t);
}
RespectfulTree gamma2() {
    BinTree t;
    int n34 = fork(t, leaf(t), leaf(t));
    int n24 = fork(t, leaf(t), n34);
    t.root = fork(t, leaf(t), n24);
    return respectful_from_shape(t);
}

RespectfulTree single_leaf() {
    BinTree t;
    t.root = leaf(t);
    return respectful_from_shape(t);
}

}  // namespace

TEST_CASE("is_respectful on the sample trees") {
    CHECK_FALSE(is_respectful(sample_non_respectful()));
    CHECK_FALSE(is_respectful(sample_non_respectful(), /*direct_s1s2=*/true));
    CHECK(is_respectful(sample_respectful()));
    CHECK(is_respectful(sample_respectful(), /*direct_s1s2=*/true));
    CHECK(is_respectful(single_leaf()));
    BinTree not_full;
    BinTree::Node nd;
    nd.left = not_full.add({});
    not_full.root = not_full.add(nd);
    CHECK_THROWS_AS(is_respectful(RespectfulTree{not_full, {}}), domain_error);
}

TEST_CASE("both respectfulness predicates agree") {
    for (int leaves = 1; leaves <= 6; ++leaves)
        for (const auto& shape : enumerate_full_shapes(leaves)) {
            RespectfulTree g = respectful_from_shape(shape);
            CHECK(is_respectful(g) == is_respectful(g, true));
        }
}

TEST_CASE("faithful marking") {
    RespectfulTree marked = faithful_marking(sample_respectful());
    // Forced by leaf counts: root [1,7]; left subtree [1,5] with [1,3] =
    // ([1], [2,3]) and [4,5]; right subtree [6,7].
    const BinTree& t = marked.tree;
    auto interval = [&](int v) { return std::pair(t.nodes[static_cast<size_t>(v)].lo, t.nodes[static_cast<size_t>(v)].hi); };
    CHECK(interval(t.root) == std::pair(1, 7));
    int left = t.nodes[static_cast<size_t>(t.root)].left;
    int right = t.nodes[static_cast<size_t>(t.root)].right;
    CHECK(interval(left) == std::pair(1, 5));
    CHECK(interval(right) == std::pair(6, 7));
    int ll = t.nodes[static_cast<size_t>(left)].left;
    int lr = t.nodes[static_cast<size_t>(left)].right;
    CHECK(interval(ll) == std::pair(1, 3));
    CHECK(interval(lr) == std::pair(4, 5));

    CHECK(faithful_marking(single_leaf()).tree.nodes[0].lo == 1);
    RespectfulTree two = faithful_marking(respectful_from_shape([] {
        BinTree t2;
        t2.root = fork(t2, leaf(t2), leaf(t2));
        return t2;
    }()));
    CHECK(two.tree.nodes[static_cast<size_t>(two.tree.root)].lo == 1);
    CHECK(two.tree.nodes[static_cast<size_t>(two.tree.root)].hi == 2);

    // Marking properties hold and pin the marking uniquely: interval sizes
    // equal leaf counts and children split the parent at one cut.
    for (int leaves = 1; leaves <= 6; ++leaves)
        for (const auto& shape : enumerate_full_shapes(leaves)) {
            RespectfulTree g = faithful_marking(respectful_from_shape(shape));
            for (int v = 0; v < g.tree.size(); ++v) {
                const auto& nd = g.tree.nodes[static_cast<size_t>(v)];
                int size = nd.hi - nd.lo + 1;
                int count = 0;
                auto count_leaves = [&](auto&& self, int u) -> void {
                    if (g.tree.is_leaf(u)) {
                        ++count;
                        return;
                    }
                    self(self, g.tree.nodes[static_cast<size_t>(u)].left);
                    self(self, g.tree.nodes[static_cast<size_t>(u)].right);
                };
                count_leaves(count_leaves, v);
                CHECK(size == count);
                if (!g.tree.is_leaf(v)) {
                    const auto& l = g.tree.nodes[static_cast<size_t>(nd.left)];
                    const auto& r = g.tree.nodes[static_cast<size_t>(nd.right)];
                    CHECK(l.lo == nd.lo);
                    CHECK(l.hi + 1 == r.lo);
                    CHECK(r.hi == nd.hi);
                }
            }
        }
}

TEST_CASE("hull") {
    RespectfulTree g = faithful_marking(gamma1());
    auto interval_of = [&](int v) {
        return std::pair(g.tree.nodes[static_cast<size_t>(v)].lo, g.tree.nodes[static_cast<size_t>(v)].hi);
    };
    CHECK(interval_of(hull(g, {2})) == std::pair(2, 2));
    CHECK(interval_of(hull(g, {1, 4})) == std::pair(1, 4));
    CHECK(interval_of(hull(g, {1, 3})) == std::pair(1, 3));
    CHECK_THROWS_AS(hull(g, {}), domain_error);
}

TEST_CASE("alpha on worked examples") {
    RespectfulTree g = faithful_marking(reference_l3());
    CHECK(alpha(g, {1, 2}) == tr({1, 2, 2}));
    CHECK(alpha(g, {1, 2, 3}) == Transformation::identity(3));
    RespectfulTree g1 = faithful_marking(gamma1());
    CHECK(alpha(g1, {1, 2, 4}) == tr({1, 1, 2, 4}));  // ({12},{3},{4} -> 1,2,4)
    // im(alpha_M) = M, and alpha_M is idempotent when it fixes its image.
    for (int leaves = 2; leaves <= 5; ++leaves)
        for (const auto& gamma : enumerate_respectful(leaves)) {
            RespectfulTree marked = faithful_marking(gamma);
            for (std::uint32_t mask = 1; mask < (1u << leaves); ++mask) {
                std::vector<int> m;
                for (int x = 1; x <= leaves; ++x)
                    if (mask & (1u << (x - 1))) m.push_back(x);
                Transformation a = alpha(marked, m);
                CHECK(a.image() == m);
                bool fixes_image = std::all_of(m.begin(), m.end(),
                                               [&](int x) { return a.apply(x) == x; });
                if (fixes_image) CHECK(a.is_idempotent());
            }
        }
}

TEST_CASE("l_cross_section") {
    CrossSection l3 = l_cross_section(reference_l3());
    CrossSection expected(3, Green::L,
                          {tr({1, 2, 2}), tr({1, 3, 3}), tr({2, 3, 3}), tr({1, 1, 1}),
                           tr({2, 2, 2}), tr({3, 3, 3}), tr({1, 2, 3})});
    CHECK(l3 == expected);
    CHECK(l_cross_section(single_leaf()).elements ==
          std::vector<Transformation>{Transformation::constant(1, 1)});
    CrossSection l4 = l_cross_section(gamma1());
    CHECK(l4.elements.size() == 15);
    CHECK(is_cross_section(l4));
    // Arbitrary order: an L-cross-section of T_n, not inside O_n.
    CrossSection twisted = l_cross_section(reference_l3(), {2, 1, 3});
    CHECK(is_tn_cross_section(twisted));
    CHECK(std::any_of(twisted.elements.begin(), twisted.elements.end(),
                      [](const Transformation& t) { return !t.is_order_preserving(); }));
    // Distinct respectful trees with the natural marking give distinct
    // L-cross-sections.
    for (int leaves = 1; leaves <= 5; ++leaves) {
        std::set<CrossSection> seen;
        for (const auto& gamma : enumerate_respectful(leaves))
            CHECK(seen.insert(l_cross_section(gamma)).second);
    }
}

TEST_CASE("similar") {
    Similarity s12 = similar(gamma1(), gamma2());
    CHECK(s12.verdict == SimilarityVerdict::anti);
    CHECK(s12.anti_witness.has_value());
    CHECK_FALSE(s12.iso_witness.has_value());
    CHECK(similar(gamma1(), gamma1()).admits_iso());
    // A perfectly balanced tree is mirror symmetric.
    BinTree balanced;
    balanced.root = fork(balanced, fork(balanced, leaf(balanced), leaf(balanced)),
                         fork(balanced, leaf(balanced), leaf(balanced)));
    CHECK(similar(balanced, balanced).verdict == SimilarityVerdict::both);
    CHECK(similar(gamma1().tree, reference_l3().tree).verdict == SimilarityVerdict::none);
}

TEST_CASE("dual r cross-section of the three-point reference section") {
    CrossSection l3 = l_cross_section(reference_l3());
    CrossSection dual1 = dual_r_cross_section(l3, 1);
    // The starred maps, element by element, plus const_1.
    CrossSection expected(4, Green::R,
                          {tr({1, 2, 4, 4}), tr({1, 2, 2, 4}), tr({1, 1, 2, 4}), tr({1, 4, 4, 4}),
                           tr({1, 1, 4, 4}), tr({1, 1, 1, 4}), tr({1, 2, 3, 4}), tr({1, 1, 1, 1})});
    CHECK(dual1 == expected);
    CHECK(fixed_points(dual1) == std::vector<int>{1, 4});
    CrossSection dual4 = dual_r_cross_section(l3, 4);
    CHECK(is_cross_section(dual4));
    CHECK(fixed_points(dual4) == std::vector<int>{1, 4});
    CHECK_THROWS_AS(dual_r_cross_section(l3, 3), domain_error);

    // n = 1: {id_2*, const_2}.
    CrossSection l1 = l_cross_section(single_leaf());
    CrossSection d = dual_r_cross_section(l1, 2);
    CHECK(d.elements == std::vector<Transformation>{Transformation::identity(2),
                                                    Transformation::constant(2, 2)});
}

TEST_CASE("elementary_from_respectful") {
    CHECK(elementary_from_respectful(single_leaf(), 2) == make_tree(2, 2, {{2, 1, 0}}));
    CHECK(elementary_from_respectful(single_leaf(), 1) == make_tree(2, 1, {{1, 0, 2}}));

    // Two-leaf cherry: both root choices, structures forced.
    BinTree cherry;
    cherry.root = fork(cherry, leaf(cherry), leaf(cherry));
    CHECK(elementary_from_respectful(respectful_from_shape(cherry), 1) ==
          make_tree(3, 1, {{1, 0, 3}, {3, 2, 0}}));
    CHECK(elementary_from_respectful(respectful_from_shape(cherry), 3) ==
          make_tree(3, 3, {{3, 1, 0}, {1, 0, 2}}));

    // The inner tree of the left-comb elementary tree regenerates it with root 5.
    OrderedTree t2_5 = make_tree(5, 5, {{5, 1, 0}, {1, 0, 4}, {4, 3, 0}, {3, 2, 0}});
    RespectfulTree comb = respectful_from_elementary(t2_5);
    CHECK(elementary_from_respectful(comb, 5) == t2_5);
    OrderedTree other_root = elementary_from_respectful(comb, 1);
    CHECK(is_elementary(other_root));
    CHECK(other_root.root() == 1);
    CHECK(shape_equal(inner_tree(other_root).tree, comb.tree));

    CHECK_THROWS_AS(elementary_from_respectful(single_leaf(), 3), domain_error);
    // A non-respectful input is refused up front.  This shape is an inner
    // tree of a non-elementary tree, so no elementary tree matches it.
    BinTree g;
    int n23 = fork(g, leaf(g), leaf(g));
    int n24 = fork(g, n23, leaf(g));
    g.root = fork(g, leaf(g), n24);
    CHECK_FALSE(is_respectful(RespectfulTree{g, {}}));
    CHECK_THROWS_AS(elementary_from_respectful(RespectfulTree{g, {}}, 1), domain_error);
    CHECK_THROWS_AS(elementary_from_respectful(sample_non_respectful(), 1), domain_error);
}

TEST_CASE("respectful_from_elementary") {
    CHECK(respectful_from_elementary(make_tree(2, 2, {{2, 1, 0}})).leaves() == 1);
    OrderedTree t2_5 = make_tree(5, 5, {{5, 1, 0}, {1, 0, 4}, {4, 3, 0}, {3, 2, 0}});
    RespectfulTree g = respectful_from_elementary(t2_5);
    CHECK(g.leaves() == 4);
    CHECK(is_respectful(g));
    CHECK_THROWS_AS(respectful_from_elementary(make_tree(3, 2, {{2, 1, 3}})), domain_error);
    // Every elementary tree in the small enumeration has a respectful inner
    // tree, and the correspondence round-trips both ways.
    for (int n = 2; n <= 7; ++n)
        for (const auto& t : enumerate_decreasing(n))
            if (is_elementary(t)) {
                RespectfulTree gamma = respectful_from_elementary(t);
                CHECK(elementary_from_respectful(gamma, t.root()) == t);
            }
    for (int leaves = 1; leaves <= 5; ++leaves)
        for (const auto& gamma : enumerate_respectful(leaves))
            for (int root : {1, leaves + 1})
                CHECK(shape_equal(
                    respectful_from_elementary(elementary_from_respectful(gamma, root)).tree,
                    gamma.tree));
}

TEST_CASE("dual identity: (L^Gamma)* = Phi minus the constant") {
    for (int leaves = 1; leaves <= 5; ++leaves)
        for (const auto& gamma : enumerate_respectful(leaves)) {
            CrossSection l = l_cross_section(gamma);
            std::set<Transformation> starred;
            for (const auto& a : l.elements) starred.insert(higgins_dual(a));
            for (int root : {1, leaves + 1}) {
                OrderedTree elem = elementary_from_respectful(gamma, root);
                auto phi_elems = PhiSemigroup::build(elem).as_cross_section().elements;
                std::set<Transformation> phi_side(phi_elems.begin(), phi_elems.end());
                phi_side.erase(Transformation::constant(leaves + 1, root));
                CHECK(phi_side == starred);
            }
        }
}
