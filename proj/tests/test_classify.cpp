#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oncross/classify.hpp"
#include "test_util.hpp"

using namespace oncross;
using oncross::test::make_tree;

namespace {

OrderedTree chain_daughters(int n) {
    std::vector<std::tuple<int, int, int>> edges;
    for (int v = 1; v < n; ++v) edges.push_back({v, 0, v + 1});
    return make_tree(n, 1, edges);
}
OrderedTree t3_5() { return make_tree(5, 3, {{3, 1, 4}, {1, 0, 2}, {4, 0, 5}}); }
OrderedTree t2_5() { return make_tree(5, 5, {{5, 1, 0}, {1, 0, 4}, {4, 3, 0}, {3, 2, 0}}); }

}  // namespace

TEST_CASE("skeleton signatures") {
    SkeletonSignature chain = skeleton_signature(chain_daughters(5));
    std::vector<int> expected(5);
    std::iota(expected.begin(), expected.end(), 1);
    CHECK(chain.vertices == expected);
    CHECK(chain.root == 1);

    SkeletonSignature elem = skeleton_signature(t2_5());
    CHECK(elem.vertices == std::vector<int>{1, 5});
    CHECK(elem.root == 5);

    CHECK(chain.mirrored().vertices == expected);
    CHECK(chain.mirrored().root == 5);
    CHECK(skeleton_signature(t3_5()).vertices == std::vector<int>{1, 3, 4, 5});
}

TEST_CASE("classify: basic verdicts") {
    OrderedTree t = t3_5();
    IsoVerdict self = classify(t, t);
    CHECK(self.isomorphic);
    CHECK(self.skeleton_alignment == Orientation::iso);

    IsoVerdict mirror = classify(t, t.mirror());
    CHECK(mirror.isomorphic);
    CHECK(mirror.skeleton_alignment == Orientation::anti);

    // Dense ascending vs a dual-type elementary tree: skeleton sizes differ.
    IsoVerdict different = classify(chain_daughters(4), make_tree(4, 1, {{1, 0, 4}, {4, 2, 0}, {2, 0, 3}}));
    CHECK_FALSE(different.isomorphic);

    CHECK_THROWS_AS(classify(chain_daughters(3), chain_daughters(4)), domain_error);
    OrderedTree not_decreasing = make_tree(4, 1, {{1, 0, 2}, {2, 0, 4}, {4, 3, 0}});
    CHECK_THROWS_AS(classify(not_decreasing, chain_daughters(4)), domain_error);
}

TEST_CASE("theta cardinality law") {
    CHECK(theta_cardinality(t3_5(), 3) == 1);
    CHECK(theta_cardinality(t3_5(), 1) == 2);
    CHECK(theta_cardinality(chain_daughters(4), 2) == 1);
    CHECK_THROWS_AS(theta_cardinality(t3_5(), 2), domain_error);  // not on the skeleton
    for (int n = 1; n <= 6; ++n)
        for (const auto& t : enumerate_decreasing(n)) {
            PhiSemigroup sg = PhiSemigroup::build(t);
            for (int x : skeleton(t))
                CHECK(theta_cardinality(t, x) ==
                      static_cast<long long>(theta_set(sg, x).members.size()));
        }
}

TEST_CASE("oracle finds witnesses and rejects non-isomorphic pairs") {
    CrossSection dense_a = dense_cross_section(4, Direction::ascending);
    CrossSection dense_d = dense_cross_section(4, Direction::descending);
    auto identity_witness = oracle_semigroup_iso(dense_a, dense_a);
    REQUIRE(identity_witness.has_value());
    std::vector<int> id_map(dense_a.elements.size());
    std::iota(id_map.begin(), id_map.end(), 0);
    CHECK(*identity_witness == id_map);

    CHECK(oracle_semigroup_iso(dense_a, dense_d).has_value());

    // Theta cardinality multisets differ: chain vs the R5 tree.
    CrossSection r5 = PhiSemigroup::build(make_tree(4, 1, {{1, 0, 3}, {3, 2, 4}})).as_cross_section();
    CHECK_FALSE(oracle_semigroup_iso(dense_a, r5).has_value());

    CHECK_THROWS_AS(oracle_semigroup_iso(dense_a, dense_a, /*guard=*/4), guard_error);
}

TEST_CASE("classify agrees with the oracle exhaustively for n <= 4") {
    for (int n = 2; n <= 4; ++n) {
        auto trees = enumerate_decreasing(n);
        std::vector<CrossSection> phis;
        for (const auto& t : trees) phis.push_back(PhiSemigroup::build(t).as_cross_section());
        for (size_t i = 0; i < trees.size(); ++i)
            for (size_t j = 0; j < trees.size(); ++j) {
                bool structural = classify(trees[i], trees[j]).isomorphic;
                bool oracle = oracle_semigroup_iso(phis[i], phis[j]).has_value();
                CHECK(structural == oracle);
            }
    }
}

TEST_CASE("classify is an equivalence relation on the n=4 population") {
    auto trees = enumerate_decreasing(4);
    const size_t count = trees.size();
    std::vector<std::vector<bool>> iso(count, std::vector<bool>(count));
    for (size_t i = 0; i < count; ++i)
        for (size_t j = 0; j < count; ++j) iso[i][j] = classify(trees[i], trees[j]).isomorphic;
    for (size_t i = 0; i < count; ++i) CHECK(iso[i][i]);
    for (size_t i = 0; i < count; ++i)
        for (size_t j = 0; j < count; ++j) CHECK(iso[i][j] == iso[j][i]);
    for (size_t i = 0; i < count; ++i)
        for (size_t j = 0; j < count; ++j)
            for (size_t k = 0; k < count; ++k)
                if (iso[i][j] && iso[j][k]) CHECK(iso[i][k]);
}

TEST_CASE("mirror involution: every decreasing tree is isomorphic to its mirror") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& t : enumerate_decreasing(n)) {
            OrderedTree m = t.mirror();
            CHECK(is_decreasing(m));
            CHECK(classify(t, m).isomorphic);
        }
}

TEST_CASE("pi map on a hand-checked pair") {
    // Source: the 5-point elementary tree root 1, dau 5, s(5)=2, dau(2)=3,
    // dau(3)=4.  Targets: the components of the 9-point tree root 5 with
    // son arm to 1 and daughter arm to 9.
    OrderedTree source = make_tree(5, 1, {{1, 0, 5}, {5, 2, 0}, {2, 0, 3}, {3, 0, 4}});
    OrderedTree big = make_tree(
        9, 5, {{5, 1, 9}, {1, 0, 2}, {2, 0, 3}, {3, 0, 4}, {9, 8, 0}, {8, 7, 0}, {7, 6, 0}});
    auto comps = elementary_decomposition(big);
    REQUIRE(comps.size() == 2);
    ElementaryComponent src{5, 1, 5, source};

    PiMap to_left = pi_map(src, comps[0], Orientation::iso);
    for (int x = 1; x <= 5; ++x) CHECK(to_left.apply(x) == x);

    PiMap to_right = pi_map(src, comps[1], Orientation::anti);
    CHECK(to_right.map == std::vector<int>{9, 8, 7, 6, 5});

    CHECK_THROWS_AS(pi_map(src, comps[1], Orientation::iso), domain_error);
}

TEST_CASE("pi map preserves root paths: omega(x pi) = omega(x) pi") {
    // Every elementary component arising from a decreasing tree on n <= 7
    // vertices, deduplicated up to relabeling.
    std::vector<ElementaryComponent> components;
    for (int n = 2; n <= 7; ++n)
        for (const auto& t : enumerate_decreasing(n))
            for (auto& comp : elementary_decomposition(t)) {
                bool fresh = std::none_of(
                    components.begin(), components.end(),
                    [&](const ElementaryComponent& c) { return c.tree == comp.tree; });
                if (fresh)
                    components.push_back(
                        ElementaryComponent{comp.anchor - comp.lo + 1, 1, comp.hi - comp.lo + 1,
                                            comp.tree});
            }
    int pairs_checked = 0;
    for (const auto& a : components)
        for (const auto& b : components) {
            if (a.hi != b.hi) continue;
            Similarity sim = similar(inner_tree(a.tree).tree, inner_tree(b.tree).tree);
            for (Orientation o : {Orientation::iso, Orientation::anti}) {
                bool admitted = o == Orientation::iso ? sim.admits_iso() : sim.admits_anti();
                if (!admitted) continue;
                PiMap pi = pi_map(a, b, o);
                ++pairs_checked;
                for (int x = 2; x < a.hi; ++x) {  // interior vertices only
                    std::vector<int> lhs = b.tree.omega(pi.apply(x));
                    std::vector<int> rhs;
                    for (int w : a.tree.omega(x)) rhs.push_back(pi.apply(w));
                    std::sort(lhs.begin(), lhs.end());
                    std::sort(rhs.begin(), rhs.end());
                    CHECK(lhs == rhs);
                }
            }
        }
    CHECK(pairs_checked > 0);
}
