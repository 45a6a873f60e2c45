#pragma once

/// Isomorphism of R-cross-sections, decided structurally from the trees:
/// skeletons must match under the identity or the mirror alignment, and the
/// paired elementary components must have similar inner trees with one
/// shared orientation.  A backtracking semigroup-isomorphism oracle supplies
/// ground truth.

#include <optional>
#include <string>
#include <vector>

#include "oncross/l_section.hpp"
#include "oncross/phi.hpp"

namespace oncross {

// The skeleton as a labeled path structure: sorted vertex labels plus the
// root position.  Gap sizes and genders are derivable (vertices below the
// root sit on the son arm, above it on the daughter arm).
struct SkeletonSignature {
    int n = 0;
    std::vector<int> vertices;  // ascending, first = 1, last = n
    int root = 0;

    SkeletonSignature mirrored() const;
    bool operator==(const SkeletonSignature&) const = default;
};

SkeletonSignature skeleton_signature(const OrderedTree& t);

enum class Orientation { iso, anti };

struct ComponentVerdict {
    int anchor1 = 0;
    int anchor2 = 0;
    SimilarityVerdict similarity = SimilarityVerdict::none;
};

struct IsoVerdict {
    bool isomorphic = false;
    std::optional<Orientation> skeleton_alignment;  // eta
    std::optional<Orientation> component_orientation;  // shared psi
    std::vector<ComponentVerdict> components;
    std::optional<std::vector<int>> oracle_witness;
};

// Tries eta = iso with the identity skeleton alignment and eta = anti with
// the mirror alignment; within an alignment all component witnesses must
// admit one common orientation.  The component orientation is free of the
// skeleton alignment (verified against the oracle exhaustively at n <= 5).
IsoVerdict classify(const OrderedTree& t1, const OrderedTree& t2);

// Backtracking search for a multiplication-preserving bijection between two
// cross-sections.  Idempotency and rank are used for candidate pruning
// only; a found bijection is verified in full before being returned.
std::optional<std::vector<int>> oracle_semigroup_iso(const CrossSection& s1,
                                                     const CrossSection& s2,
                                                     int guard = 64);

// |Theta^x| along the skeleton: 1 at the root, times |p(x) - x| per step.
long long theta_cardinality(const OrderedTree& t, int x);

// Vertex correspondence between two elementary components induced by a
// similarity of their inner trees: interior points map through the leaf
// bijection (cells), endpoints through the leftover rule.
struct PiMap {
    int lo1 = 0, hi1 = 0;  // source component interval
    int lo2 = 0, hi2 = 0;  // target component interval
    std::vector<int> map;  // map[x - lo1] in [lo2, hi2]
    int apply(int x) const { return map[static_cast<size_t>(x - lo1)]; }
};

PiMap pi_map(const ElementaryComponent& a, const ElementaryComponent& b, Orientation o);

}  // namespace oncross
