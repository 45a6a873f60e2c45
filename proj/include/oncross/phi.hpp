#pragma once

/// The partition-tree construction: for a decreasing tree and a convex
/// partition, the unique homomorphism from the partition tree into the tree
/// induces one transformation per partition.  Together these form an
/// R-cross-section, and every R-cross-section arises this way; the W-chain
/// reconstruction recovers the tree from the cross-section.

#include <vector>

#include "oncross/cross_section.hpp"
#include "oncross/inner_tree.hpp"

namespace oncross {

// Binary tree on the blocks of a convex partition.  Children are the blocks
// holding the highest point of the unassigned gap immediately left/right of
// the parent's territory; that point is the block's leading element.
struct PartitionTree {
    struct Node {
        int parent = -1;
        int son = -1;
        int daughter = -1;
        int leading = 0;
    };
    ConvexPartition partition;
    std::vector<Node> nodes;  // indexed by block index
    int root_block = 0;
};

PartitionTree partition_tree(const OrderedTree& t, const ConvexPartition& k);

// phi^K: root block -> rt, then child blocks follow son/daughter edges.
// Requires a decreasing tree; the kernel of the result is exactly k.
Transformation phi(const OrderedTree& t, const ConvexPartition& k);

// All 2^{n-1} values of phi, indexed by the partition's cut mask.
class PhiSemigroup {
  public:
    static PhiSemigroup build(const OrderedTree& t);

    const OrderedTree& tree() const { return tree_; }
    int n() const { return tree_.n(); }
    const Transformation& at(const ConvexPartition& k) const;
    const std::vector<Transformation>& by_cut_mask() const { return by_mask_; }
    CrossSection as_cross_section() const;

  private:
    explicit PhiSemigroup(OrderedTree t) : tree_(std::move(t)) {}
    OrderedTree tree_;
    std::vector<Transformation> by_mask_;
};

// The left-zero set of idempotents whose image is the root path omega(v):
// exactly the phi^K whose kernel has omega(v) as a transversal.
struct ThetaSet {
    int vertex = 0;
    std::vector<int> omega;
    std::vector<Transformation> members;
};

ThetaSet theta_set(const OrderedTree& t, int v);
ThetaSet theta_set(const PhiSemigroup& phi_sg, int v);

// Recovers the decreasing tree from a validated R-cross-section by the
// image-rank chain W_0 = {fixed point} c W_1 c ... ; the differences are the
// tree levels.  Fails with a step-naming diagnostic on invalid input, and
// checks the round trip phi_semigroup(result) == S before returning.
OrderedTree reconstruct_tree(const CrossSection& s);

}  // namespace oncross
