#pragma once

/// Respectful trees and the L-cross-sections they generate.  A respectful
/// tree is a full binary tree in which every non-root vertex subordinates
/// its parent; with its unique faithful interval marking it produces one
/// canonical transformation per nonempty image set, and under the natural
/// order these form exactly the L-cross-sections of O_n.  Positionally the
/// left child is the son and the right child is the daughter.

#include <optional>
#include <vector>

#include "oncross/cross_section.hpp"
#include "oncross/inner_tree.hpp"

namespace oncross {

struct RespectfulTree {
    BinTree tree;            // lo/hi hold marking positions once marked
    std::vector<int> order;  // u_1, ..., u_n; nonempty iff marked

    bool marked() const { return !order.empty(); }
    int leaves() const { return tree.leaf_count(); }
};

RespectfulTree respectful_from_shape(const BinTree& shape);

// Every non-root vertex subordinates its parent; `direct_s1s2` instead
// checks the nephew/uncle and niece/aunt conditions literally (slower,
// kept for cross-checking).
bool is_respectful(const RespectfulTree& g, bool direct_s1s2 = false);

// The unique marking: a vertex's interval size equals its leaf count, and
// children split the parent interval at one cut (son first).  The order
// defaults to natural; a permutation yields the T_n variant.
RespectfulTree faithful_marking(const RespectfulTree& g, std::vector<int> order = {});

// Node index of the minimal marked vertex whose interval contains M.
int hull(const RespectfulTree& g, const std::vector<int>& m_points);

// The canonical representative with image M, by the hull-splitting
// recursion.  Requires a marked tree and nonempty M.
Transformation alpha(const RespectfulTree& g, const std::vector<int>& m_points);

// { alpha_M : nonempty M }, size 2^n - 1, validated as an L-cross-section
// (of O_n under the natural order, of T_n otherwise).
CrossSection l_cross_section(const RespectfulTree& g, std::vector<int> order = {});

// Full binary trees with the given leaf count that are respectful.
std::vector<RespectfulTree> enumerate_respectful(int leaves, int guard = 12);

enum class SimilarityVerdict { none, iso, anti, both };

struct Similarity {
    SimilarityVerdict verdict = SimilarityVerdict::none;
    // Node bijections g1 -> g2 (indices), present when the orientation holds.
    std::optional<std::vector<int>> iso_witness;
    std::optional<std::vector<int>> anti_witness;

    bool admits_iso() const {
        return verdict == SimilarityVerdict::iso || verdict == SimilarityVerdict::both;
    }
    bool admits_anti() const {
        return verdict == SimilarityVerdict::anti || verdict == SimilarityVerdict::both;
    }
};

// Isomorphism preserves genders, anti-isomorphism swaps them; `both` means
// the tree is mirror-symmetric.
Similarity similar(const RespectfulTree& g1, const RespectfulTree& g2);
Similarity similar(const BinTree& g1, const BinTree& g2);

// {alpha* : alpha in L} plus the chosen constant; validated R-cross-section
// of O_{n+1} with fixed points {1, n+1}.
CrossSection dual_r_cross_section(const CrossSection& l_section, int fix);

// The unique elementary decreasing tree on k+1 points, with the chosen
// root (1 or k+1), whose inner tree is g.
OrderedTree elementary_from_respectful(const RespectfulTree& g, int root_choice);

// Inner tree of an elementary tree, reinterpreted as a respectful tree
// (positional identity: cells become points).
RespectfulTree respectful_from_elementary(const OrderedTree& t);

}  // namespace oncross
