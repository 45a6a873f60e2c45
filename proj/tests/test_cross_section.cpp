#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oncross/cross_section.hpp"
#include "test_util.hpp"

using namespace oncross;
using oncross::test::tr;

namespace {

// The two dense R-cross-sections of O_4 and the R-cross-section that is
// neither dense nor dual: reference fixtures transcribed element by element.
CrossSection dense4_asc_listing() {
    return CrossSection(4, Green::R,
                        {tr({1, 1, 2, 3}), tr({1, 2, 2, 3}), tr({1, 2, 3, 3}), tr({1, 2, 2, 2}),
                         tr({1, 1, 2, 2}), tr({1, 1, 1, 2}), tr({1, 1, 1, 1}), tr({1, 2, 3, 4})});
}

CrossSection dense4_desc_listing() {
    return CrossSection(4, Green::R,
                        {tr({2, 2, 3, 4}), tr({2, 3, 3, 4}), tr({2, 3, 4, 4}), tr({3, 4, 4, 4}),
                         tr({3, 3, 4, 4}), tr({3, 3, 3, 4}), tr({4, 4, 4, 4}), tr({1, 2, 3, 4})});
}

CrossSection nondense4_listing() {
    return CrossSection(4, Green::R,
                        {tr({1, 2, 3, 3}), tr({1, 3, 3, 4}), tr({1, 1, 3, 4}), tr({1, 3, 3, 3}),
                         tr({1, 1, 3, 3}), tr({1, 1, 1, 3}), tr({1, 1, 1, 1}), tr({1, 2, 3, 4})});
}

}  // namespace

TEST_CASE("dense cross-sections reproduce the n=4 reference listings") {
    CHECK(dense_cross_section(4, Direction::ascending) == dense4_asc_listing());
    CHECK(dense_cross_section(4, Direction::descending) == dense4_desc_listing());
    CHECK(dense_cross_section(1, Direction::ascending).elements ==
          std::vector<Transformation>{Transformation::constant(1, 1)});
}

TEST_CASE("is_cross_section") {
    CHECK(is_cross_section(dense4_asc_listing()));
    CHECK(is_cross_section(nondense4_listing()));
    CrossSection missing = dense4_asc_listing();
    missing.elements.erase(
        std::find(missing.elements.begin(), missing.elements.end(), Transformation::identity(4)));
    CHECK_FALSE(is_cross_section(missing));
    // One element per class but not closed: swap the rank-3 representatives
    // of R1 for R5's (the mix is not a subsemigroup).
    CrossSection mixed(4, Green::R,
                       {tr({1, 2, 3, 3}), tr({1, 3, 3, 4}), tr({1, 1, 3, 4}), tr({1, 2, 2, 2}),
                        tr({1, 1, 2, 2}), tr({1, 1, 1, 2}), tr({1, 1, 1, 1}), tr({1, 2, 3, 4})});
    CHECK_FALSE(is_cross_section(mixed));
}

TEST_CASE("fixed points") {
    CHECK(fixed_points(dense4_asc_listing()) == std::vector<int>{1});
    CHECK(fixed_points(dense4_desc_listing()) == std::vector<int>{4});
    CHECK(fixed_points(nondense4_listing()) == std::vector<int>{1});
}

TEST_CASE("dense sections have the expected fixed point for all n <= 6") {
    // At n = 2 the dense sections coincide with the dual ones and fix both
    // endpoints; from n = 3 on the fixed point is unique.
    CHECK(fixed_points(dense_cross_section(2, Direction::ascending)) == std::vector<int>{1, 2});
    for (int n = 3; n <= 6; ++n) {
        CHECK(is_cross_section(dense_cross_section(n, Direction::ascending)));
        CHECK(fixed_points(dense_cross_section(n, Direction::ascending)) == std::vector<int>{1});
        CHECK(fixed_points(dense_cross_section(n, Direction::descending)) == std::vector<int>{n});
    }
}

TEST_CASE("pekhterev sections of T_n") {
    auto natural = [](int n) {
        std::vector<int> order(static_cast<size_t>(n));
        std::iota(order.begin(), order.end(), 1);
        return order;
    };
    CrossSection t2 = pekhterev_r_section(natural(2));
    CHECK(t2.elements == std::vector<Transformation>{Transformation::constant(2, 1),
                                                     Transformation::identity(2)});
    // Partition {13}{2} under the natural order sends {1,3} -> 1, {2} -> 2.
    CrossSection t3 = pekhterev_r_section(natural(3));
    CHECK(t3.contains(tr({1, 2, 1})));
    for (int n = 2; n <= 4; ++n) {
        CrossSection s = pekhterev_r_section(natural(n));
        CHECK(is_tn_cross_section(s));
        // Restriction to O_n is the ascending dense section.
        std::vector<Transformation> monotone;
        for (const auto& e : s.elements)
            if (e.is_order_preserving()) monotone.push_back(e);
        CHECK(CrossSection(n, Green::R, monotone) == dense_cross_section(n, Direction::ascending));
    }
    // A non-natural order still gives an R-cross-section of T_n.
    CHECK(is_tn_cross_section(pekhterev_r_section({3, 1, 2})));
    CHECK_THROWS_AS(pekhterev_r_section({1, 1, 2}), domain_error);
    CHECK_THROWS_AS(pekhterev_r_section(natural(7)), guard_error);
}
