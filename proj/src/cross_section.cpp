#include "oncross/cross_section.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace oncross {

CrossSection::CrossSection(int n_, Green rel, std::vector<Transformation> elems)
    : n(n_), relation(rel), elements(std::move(elems)) {
    for (const auto& e : elements)
        if (e.n() != n) throw domain_error("cross-section: element domain size != n");
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
}

bool CrossSection::contains(const Transformation& t) const {
    return std::binary_search(elements.begin(), elements.end(), t);
}

namespace {

bool closed_under_composition(const std::vector<Transformation>& elems) {
    for (const auto& a : elems)
        for (const auto& b : elems) {
            Transformation p = a.compose(b);
            if (!std::binary_search(elems.begin(), elems.end(), p)) return false;
        }
    return true;
}

}  // namespace

bool is_cross_section(const CrossSection& s) {
    if (s.relation != Green::R && s.relation != Green::L)
        throw domain_error("is_cross_section: only R and L cross-sections are supported");
    for (const auto& e : s.elements)
        if (!e.is_order_preserving()) return false;
    if (s.relation == Green::R) {
        // Kernel keys must biject onto all 2^{n-1} convex partitions.
        if (s.elements.size() != (1u << (s.n - 1))) return false;
        std::set<std::vector<int>> seen;
        for (const auto& e : s.elements)
            if (!seen.insert(e.convex_kernel().right_ends()).second) return false;
    } else {
        // Image keys must biject onto all 2^n - 1 nonempty subsets.
        if (s.elements.size() != (1u << s.n) - 1u) return false;
        std::set<std::vector<int>> seen;
        for (const auto& e : s.elements)
            if (!seen.insert(e.image()).second) return false;
    }
    return closed_under_composition(s.elements);
}

bool is_tn_cross_section(const CrossSection& s, const EnumerationLimits& limits) {
    if (s.relation != Green::R && s.relation != Green::L)
        throw domain_error("is_tn_cross_section: only R and L cross-sections are supported");
    if (s.relation == Green::R) {
        auto all = SetPartition::all(s.n, limits.max_tn_partition_n);
        if (s.elements.size() != all.size()) return false;
        std::set<std::vector<std::vector<int>>> seen;
        for (const auto& e : s.elements)
            if (!seen.insert(e.kernel().blocks()).second) return false;
    } else {
        if (s.elements.size() != (1u << s.n) - 1u) return false;
        std::set<std::vector<int>> seen;
        for (const auto& e : s.elements)
            if (!seen.insert(e.image()).second) return false;
    }
    return closed_under_composition(s.elements);
}

std::vector<int> fixed_points(const CrossSection& s) {
    std::vector<int> fixed;
    for (int x = 1; x <= s.n; ++x) {
        bool ok = true;
        for (const auto& e : s.elements) {
            if (e.is_constant()) continue;
            if (e.apply(x) != x) {
                ok = false;
                break;
            }
        }
        if (ok) fixed.push_back(x);
    }
    return fixed;
}

CrossSection dense_cross_section(int n, Direction dir) {
    if (n < 1) throw domain_error("dense_cross_section: n must be positive");
    std::vector<Transformation> elems;
    for (const auto& part : ConvexPartition::all(n)) {
        const int m = part.block_count();
        std::vector<int> im(static_cast<size_t>(n));
        for (int x = 1; x <= n; ++x) {
            int b = part.block_index_of(x);
            im[static_cast<size_t>(x - 1)] = dir == Direction::ascending ? b + 1 : n - m + b + 1;
        }
        elems.emplace_back(n, std::move(im));
    }
    return CrossSection(n, Green::R, std::move(elems));
}

CrossSection pekhterev_r_section(const std::vector<int>& order, const EnumerationLimits& limits) {
    const int n = static_cast<int>(order.size());
    std::vector<int> pos(static_cast<size_t>(n) + 1, 0);  // pos[x] = rank of x in the order
    {
        std::vector<char> seen(static_cast<size_t>(n) + 1, 0);
        for (int i = 0; i < n; ++i) {
            int u = order[static_cast<size_t>(i)];
            if (u < 1 || u > n || seen[static_cast<size_t>(u)])
                throw domain_error("pekhterev_r_section: order is not a permutation of 1..n");
            seen[static_cast<size_t>(u)] = 1;
            pos[static_cast<size_t>(u)] = i;
        }
    }
    std::vector<Transformation> elems;
    for (const auto& part : SetPartition::all(n, limits.max_tn_partition_n)) {
        // Sort blocks by their order-minimal member, send the i-th to u_i.
        std::vector<std::pair<int, int>> keyed;  // (min position, block index)
        for (int b = 0; b < part.block_count(); ++b) {
            int best = n;
            for (int x : part.blocks()[static_cast<size_t>(b)])
                best = std::min(best, pos[static_cast<size_t>(x)]);
            keyed.emplace_back(best, b);
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<int> im(static_cast<size_t>(n));
        for (size_t i = 0; i < keyed.size(); ++i)
            for (int x : part.blocks()[static_cast<size_t>(keyed[i].second)])
                im[static_cast<size_t>(x - 1)] = order[i];
        elems.emplace_back(n, std::move(im));
    }
    return CrossSection(n, Green::R, std::move(elems));
}

}  // namespace oncross
