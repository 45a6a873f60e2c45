#pragma once

/// Cross-sections of Green's R and L relations: the container type, the
/// validation predicates, fixed points, and the two classical constructions
/// (block-ordering sections of T_n and the dense sections of O_n).

#include <vector>

#include "oncross/transformation.hpp"

namespace oncross {

// A finite set of transformations claimed to hit each R- (or L-) class
// exactly once.  Elements are kept sorted by image sequence so that equal
// cross-sections compare equal field-wise.
struct CrossSection {
    int n = 1;
    Green relation = Green::R;
    std::vector<Transformation> elements;

    CrossSection() = default;
    CrossSection(int n_, Green rel, std::vector<Transformation> elems);

    bool contains(const Transformation& t) const;

    bool operator==(const CrossSection&) const = default;
    auto operator<=>(const CrossSection&) const = default;
};

// True iff S lies in O_n, is closed under composition, and element -> class
// key (kernel for R, image for L) bijects onto all class keys of O_n.
bool is_cross_section(const CrossSection& s);

// Same check against the full transformation monoid T_n: class keys are all
// set partitions (R) or all nonempty subsets (L).  Walks every set partition
// for R, so it inherits the T_n guard.
bool is_tn_cross_section(const CrossSection& s, const EnumerationLimits& limits = {});

// Points fixed by every non-constant element of S.
std::vector<int> fixed_points(const CrossSection& s);

enum class Direction { ascending, descending };

// The dense R-cross-sections: each m-block convex partition maps to
// (1,...,m) for ascending, (n-m+1,...,n) for descending.
CrossSection dense_cross_section(int n, Direction dir);

// R-cross-section of T_n attached to a linear order u_1 < u_2 < ... < u_n
// (given as the sequence u): the blocks of every set partition, ordered by
// their order-minimal member, are sent to u_1..u_k.
CrossSection pekhterev_r_section(const std::vector<int>& order,
                                 const EnumerationLimits& limits = {});

}  // namespace oncross
