#include "oncross/phi.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace oncross {

PartitionTree partition_tree(const OrderedTree& t, const ConvexPartition& k) {
    if (t.n() != k.n()) throw domain_error("partition_tree: sizes differ");
    PartitionTree pt{k, std::vector<PartitionTree::Node>(static_cast<size_t>(k.block_count())), 0};
    pt.root_block = k.block_index_of(t.root());
    pt.nodes[static_cast<size_t>(pt.root_block)].leading = t.root();

    // The highest (lowest-level) point of a nonempty interval is unique.
    auto highest_in = [&](int lo, int hi) {
        int best = lo;
        for (int x = lo + 1; x <= hi; ++x)
            if (t.level(x) < t.level(best)) best = x;
        return best;
    };
    // Territories are path-local: a child block always lies inside its
    // parent's gap because blocks are convex.
    auto build = [&](auto&& self, int block, int left_lo, int left_hi, int right_lo,
                     int right_hi) -> void {
        if (left_lo <= left_hi) {
            int m = highest_in(left_lo, left_hi);
            int child = k.block_index_of(m);
            pt.nodes[static_cast<size_t>(block)].son = child;
            pt.nodes[static_cast<size_t>(child)].parent = block;
            pt.nodes[static_cast<size_t>(child)].leading = m;
            auto [clo, chi] = k.block(child);
            self(self, child, left_lo, clo - 1, chi + 1, left_hi);
        }
        if (right_lo <= right_hi) {
            int m = highest_in(right_lo, right_hi);
            int child = k.block_index_of(m);
            pt.nodes[static_cast<size_t>(block)].daughter = child;
            pt.nodes[static_cast<size_t>(child)].parent = block;
            pt.nodes[static_cast<size_t>(child)].leading = m;
            auto [clo, chi] = k.block(child);
            self(self, child, right_lo, clo - 1, chi + 1, right_hi);
        }
    };
    auto [rlo, rhi] = k.block(pt.root_block);
    build(build, pt.root_block, 1, rlo - 1, rhi + 1, t.n());
    return pt;
}

namespace {

// Follows the child structure of the partition tree inside the ordered
// tree.  On a decreasing tree the needed child always exists.
Transformation phi_unchecked(const OrderedTree& t, const ConvexPartition& k) {
    PartitionTree pt = partition_tree(t, k);
    std::vector<int> block_image(static_cast<size_t>(k.block_count()), 0);
    block_image[static_cast<size_t>(pt.root_block)] = t.root();
    auto walk = [&](auto&& self, int block) -> void {
        int x = block_image[static_cast<size_t>(block)];
        const auto& nd = pt.nodes[static_cast<size_t>(block)];
        if (nd.son >= 0) {
            int sx = t.son(x);
            if (sx == 0)
                throw domain_error("phi: required son of " + std::to_string(x) +
                                   " missing; tree is not decreasing");
            block_image[static_cast<size_t>(nd.son)] = sx;
            self(self, nd.son);
        }
        if (nd.daughter >= 0) {
            int dx = t.daughter(x);
            if (dx == 0)
                throw domain_error("phi: required daughter of " + std::to_string(x) +
                                   " missing; tree is not decreasing");
            block_image[static_cast<size_t>(nd.daughter)] = dx;
            self(self, nd.daughter);
        }
    };
    walk(walk, pt.root_block);
    std::vector<int> im(static_cast<size_t>(t.n()));
    for (int x = 1; x <= t.n(); ++x)
        im[static_cast<size_t>(x - 1)] = block_image[static_cast<size_t>(k.block_index_of(x))];
    return Transformation(t.n(), std::move(im));
}

}  // namespace

Transformation phi(const OrderedTree& t, const ConvexPartition& k) {
    if (!is_decreasing(t)) throw domain_error("phi: tree is not decreasing");
    return phi_unchecked(t, k);
}

PhiSemigroup PhiSemigroup::build(const OrderedTree& t) {
    if (t.n() > 20) throw guard_error("phi_semigroup refused: n > 20");
    if (!is_decreasing(t)) throw domain_error("phi_semigroup: tree is not decreasing");
    PhiSemigroup sg(t);
    const std::uint32_t count = 1u << (t.n() - 1);
    sg.by_mask_.reserve(count);
    for (std::uint32_t mask = 0; mask < count; ++mask)
        sg.by_mask_.push_back(phi_unchecked(t, ConvexPartition::from_cut_mask(t.n(), mask)));
    return sg;
}

const Transformation& PhiSemigroup::at(const ConvexPartition& k) const {
    if (k.n() != n()) throw domain_error("PhiSemigroup::at: partition size differs");
    return by_mask_[k.cut_mask()];
}

CrossSection PhiSemigroup::as_cross_section() const {
    return CrossSection(n(), Green::R, by_mask_);
}

ThetaSet theta_set(const OrderedTree& t, int v) {
    return theta_set(PhiSemigroup::build(t), v);
}

ThetaSet theta_set(const PhiSemigroup& phi_sg, int v) {
    const OrderedTree& t = phi_sg.tree();
    ThetaSet out;
    out.vertex = v;
    out.omega = t.omega(v);
    std::vector<int> sorted_omega = out.omega;
    std::sort(sorted_omega.begin(), sorted_omega.end());
    for (const auto& partition : ConvexPartition::all(t.n())) {
        if (partition.block_count() != static_cast<int>(sorted_omega.size())) continue;
        bool transversal = true;
        for (int b = 0; b < partition.block_count() && transversal; ++b) {
            auto [lo, hi] = partition.block(b);
            auto first = std::lower_bound(sorted_omega.begin(), sorted_omega.end(), lo);
            transversal = first != sorted_omega.end() && *first <= hi &&
                          (first + 1 == sorted_omega.end() || *(first + 1) > hi);
        }
        if (transversal) out.members.push_back(phi_sg.at(partition));
    }
    return out;
}

OrderedTree reconstruct_tree(const CrossSection& s) {
    if (s.relation != Green::R)
        throw domain_error("reconstruct_tree: expected an R-cross-section");
    const int n = s.n;
    // Step 1: the unique constant gives the fixed point r = W_0.
    std::vector<int> constants;
    for (const auto& e : s.elements)
        if (e.is_constant()) constants.push_back(e.apply(1));
    if (constants.size() != 1)
        throw domain_error("reconstruct_tree: input has " + std::to_string(constants.size()) +
                           " constants, expected exactly one (not a cross-section)");
    // Step 2: the image-rank chain; W'_i become the tree levels.
    std::vector<int> level(static_cast<size_t>(n) + 1, -1);
    level[static_cast<size_t>(constants[0])] = 0;
    int assigned = 1;
    for (int i = 1; assigned < n; ++i) {
        if (i > n)
            throw domain_error("reconstruct_tree: image-rank chain does not exhaust 1..n "
                               "(not a cross-section)");
        int added = 0;
        for (const auto& e : s.elements) {
            if (e.rank() != i + 1) continue;
            for (int x : e.image())
                if (level[static_cast<size_t>(x)] < 0) {
                    level[static_cast<size_t>(x)] = i;
                    ++added;
                }
        }
        if (added > (1 << i))
            throw domain_error("reconstruct_tree: level " + std::to_string(i) +
                               " exceeds the 2^i bound (not a cross-section)");
        assigned += added;
    }
    Diagram d;
    d.n = n;
    d.level.assign(level.begin() + 1, level.end());
    // Step 3: the unique order-preserving tree with these levels.
    OrderedTree t = tree_from_diagram(d);
    if (!is_decreasing(t))
        throw domain_error("reconstruct_tree: level tree is not decreasing (not a cross-section)");
    // Step 4: the round trip must reproduce the input exactly.
    if (PhiSemigroup::build(t).as_cross_section() != s)
        throw domain_error("reconstruct_tree: tree does not regenerate the input "
                           "(not a cross-section)");
    return t;
}

}  // namespace oncross
