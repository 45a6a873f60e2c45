#include "oncross/classify.hpp"

#include <algorithm>
#include <map>

namespace oncross {

SkeletonSignature SkeletonSignature::mirrored() const {
    SkeletonSignature out;
    out.n = n;
    out.root = n + 1 - root;
    out.vertices.reserve(vertices.size());
    for (auto it = vertices.rbegin(); it != vertices.rend(); ++it)
        out.vertices.push_back(n + 1 - *it);
    return out;
}

SkeletonSignature skeleton_signature(const OrderedTree& t) {
    if (!is_decreasing(t)) throw domain_error("skeleton_signature: tree is not decreasing");
    return SkeletonSignature{t.n(), skeleton(t), t.root()};
}

IsoVerdict classify(const OrderedTree& t1, const OrderedTree& t2) {
    if (t1.n() != t2.n()) throw domain_error("classify: trees have different sizes");
    if (!is_decreasing(t1) || !is_decreasing(t2))
        throw domain_error("classify: both trees must be decreasing");
    const int n = t1.n();
    SkeletonSignature sig1 = skeleton_signature(t1);
    SkeletonSignature sig2 = skeleton_signature(t2);
    auto decomp1 = elementary_decomposition(t1);
    auto decomp2 = elementary_decomposition(t2);
    std::map<int, const ElementaryComponent*> by_anchor2;
    for (const auto& c : decomp2) by_anchor2[c.anchor] = &c;

    IsoVerdict last_skeleton_match;
    bool saw_skeleton_match = false;
    for (Orientation eta : {Orientation::iso, Orientation::anti}) {
        bool aligned = eta == Orientation::iso ? sig1 == sig2 : sig1.mirrored() == sig2;
        if (!aligned) continue;
        IsoVerdict v;
        v.skeleton_alignment = eta;
        bool all_iso = true, all_anti = true;
        for (const auto& comp : decomp1) {
            int anchor2 = eta == Orientation::iso ? comp.anchor : n + 1 - comp.anchor;
            const ElementaryComponent* other = by_anchor2.at(anchor2);
            Similarity sim = similar(inner_tree(comp.tree).tree, inner_tree(other->tree).tree);
            v.components.push_back({comp.anchor, anchor2, sim.verdict});
            all_iso = all_iso && sim.admits_iso();
            all_anti = all_anti && sim.admits_anti();
        }
        if (all_iso || all_anti) {
            v.isomorphic = true;
            v.component_orientation = all_iso ? Orientation::iso : Orientation::anti;
            return v;
        }
        last_skeleton_match = v;
        saw_skeleton_match = true;
    }
    if (saw_skeleton_match) return last_skeleton_match;
    return IsoVerdict{};
}

std::optional<std::vector<int>> oracle_semigroup_iso(const CrossSection& s1,
                                                     const CrossSection& s2, int guard) {
    const auto& e1 = s1.elements;
    const auto& e2 = s2.elements;
    if (e1.size() != e2.size()) return std::nullopt;
    const int m = static_cast<int>(e1.size());
    if (m > guard) throw guard_error("oracle_semigroup_iso refused: more than guard elements");
    if (m == 0) return std::vector<int>{};

    auto build_table = [](const std::vector<Transformation>& es) {
        const int k = static_cast<int>(es.size());
        std::vector<std::vector<int>> table(static_cast<size_t>(k),
                                            std::vector<int>(static_cast<size_t>(k)));
        std::map<Transformation, int> index;
        for (int i = 0; i < k; ++i) index.emplace(es[static_cast<size_t>(i)], i);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                auto it = index.find(es[static_cast<size_t>(i)].compose(es[static_cast<size_t>(j)]));
                if (it == index.end())
                    throw domain_error("oracle_semigroup_iso: set is not closed under composition");
                table[static_cast<size_t>(i)][static_cast<size_t>(j)] = it->second;
            }
        return table;
    };
    auto mul1 = build_table(e1);
    auto mul2 = build_table(e2);

    // Sound pruning signature: idempotency is abstract, and rank is
    // preserved by any isomorphism of R-cross-sections (the Theta-set
    // machinery pins image sizes); neither is trusted for the final answer.
    auto signature = [](const Transformation& t) {
        return std::pair<int, int>(t.is_idempotent() ? 0 : 1, t.rank());
    };
    std::vector<std::pair<int, int>> sg1(static_cast<size_t>(m)), sg2(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        sg1[static_cast<size_t>(i)] = signature(e1[static_cast<size_t>(i)]);
        sg2[static_cast<size_t>(i)] = signature(e2[static_cast<size_t>(i)]);
    }
    {
        auto a = sg1, b = sg2;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return std::nullopt;
    }

    // Idempotents first, grouped by rank.
    std::vector<int> order(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) order[static_cast<size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (sg1[static_cast<size_t>(a)] != sg1[static_cast<size_t>(b)])
            return sg1[static_cast<size_t>(a)] < sg1[static_cast<size_t>(b)];
        return a < b;
    });

    std::vector<int> fwd(static_cast<size_t>(m), -1), bwd(static_cast<size_t>(m), -1);
    // Assigning i -> j propagates through both multiplication tables.
    auto assign = [&](int i, int j) -> bool {
        std::vector<std::pair<int, int>> stack{{i, j}};
        while (!stack.empty()) {
            auto [a, b] = stack.back();
            stack.pop_back();
            if (fwd[static_cast<size_t>(a)] != -1) {
                if (fwd[static_cast<size_t>(a)] != b) return false;
                continue;
            }
            if (bwd[static_cast<size_t>(b)] != -1) return false;
            if (sg1[static_cast<size_t>(a)] != sg2[static_cast<size_t>(b)]) return false;
            fwd[static_cast<size_t>(a)] = b;
            bwd[static_cast<size_t>(b)] = a;
            for (int c = 0; c < m; ++c) {
                if (fwd[static_cast<size_t>(c)] == -1) continue;
                int fc = fwd[static_cast<size_t>(c)];
                stack.emplace_back(mul1[static_cast<size_t>(a)][static_cast<size_t>(c)],
                                   mul2[static_cast<size_t>(b)][static_cast<size_t>(fc)]);
                stack.emplace_back(mul1[static_cast<size_t>(c)][static_cast<size_t>(a)],
                                   mul2[static_cast<size_t>(fc)][static_cast<size_t>(b)]);
            }
        }
        return true;
    };
    auto verify = [&]() -> bool {
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j)
                if (fwd[static_cast<size_t>(mul1[static_cast<size_t>(i)][static_cast<size_t>(j)])] !=
                    mul2[static_cast<size_t>(fwd[static_cast<size_t>(i)])]
                        [static_cast<size_t>(fwd[static_cast<size_t>(j)])])
                    return false;
        return true;
    };
    auto search = [&](auto&& self, size_t k) -> bool {
        while (k < order.size() && fwd[static_cast<size_t>(order[k])] != -1) ++k;
        if (k == order.size()) return verify();
        int i = order[k];
        for (int j = 0; j < m; ++j) {
            if (bwd[static_cast<size_t>(j)] != -1) continue;
            if (sg2[static_cast<size_t>(j)] != sg1[static_cast<size_t>(i)]) continue;
            auto saved_fwd = fwd;
            auto saved_bwd = bwd;
            if (assign(i, j) && self(self, k + 1)) return true;
            fwd = std::move(saved_fwd);
            bwd = std::move(saved_bwd);
        }
        return false;
    };
    if (search(search, 0)) return fwd;
    return std::nullopt;
}

long long theta_cardinality(const OrderedTree& t, int x) {
    auto sk = skeleton(t);
    if (!std::binary_search(sk.begin(), sk.end(), x))
        throw domain_error("theta_cardinality: vertex is not on the skeleton");
    std::vector<int> path = t.omega(x);  // x, p(x), ..., rt
    long long value = 1;
    for (size_t i = 0; i + 1 < path.size(); ++i)
        value *= std::abs(path[i + 1] - path[i]);
    return value;
}

PiMap pi_map(const ElementaryComponent& a, const ElementaryComponent& b, Orientation o) {
    InnerTree ga = inner_tree(a.tree);
    InnerTree gb = inner_tree(b.tree);
    Similarity sim = similar(ga.tree, gb.tree);
    const std::optional<std::vector<int>>& witness =
        o == Orientation::iso ? sim.iso_witness : sim.anti_witness;
    if (!witness)
        throw domain_error("pi_map: components are not similar with the requested orientation");
    const int k = a.hi - a.lo + 1;
    if (b.hi - b.lo + 1 != k) throw domain_error("pi_map: component sizes differ");
    PiMap out;
    out.lo1 = a.lo;
    out.hi1 = a.hi;
    out.lo2 = b.lo;
    out.hi2 = b.hi;
    out.map.assign(static_cast<size_t>(k), 0);
    // Interior points travel through the leaf bijection on cells; the one
    // point with no cell goes to the one target point left over.
    auto local_target = [&](int local_cell) {
        for (int v = 0; v < ga.tree.size(); ++v) {
            const auto& nd = ga.tree.nodes[static_cast<size_t>(v)];
            if (ga.tree.is_leaf(v) && nd.lo == local_cell)
                return gb.tree.nodes[static_cast<size_t>((*witness)[static_cast<size_t>(v)])].lo;
        }
        throw domain_error("pi_map: cell leaf not found");
    };
    for (int x = 1; x <= k - 1; ++x) {
        int c = local_target(x);
        out.map[static_cast<size_t>(x - 1)] = o == Orientation::iso ? c : c + 1;
    }
    out.map[static_cast<size_t>(k - 1)] = o == Orientation::iso ? k : 1;
    for (int& v : out.map) v += b.lo - 1;
    return out;
}

}  // namespace oncross
