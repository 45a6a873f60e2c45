#include "oncross/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <set>
#include <sstream>

#include "oncross/l_section.hpp"
#include "oncross/phi.hpp"

namespace oncross {

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetWatch {
    Clock::time_point start = Clock::now();
    double budget_seconds = 0;
    long long ticks = 0;

    void tick() {
        if (budget_seconds <= 0) return;
        if ((++ticks & 1023) != 0) return;
        if (elapsed() > budget_seconds) throw guard_error("search budget exceeded");
    }
    double elapsed() const {
        return std::chrono::duration<double>(Clock::now() - start).count();
    }
};

// Strictly increasing m-subsets of 1..n in lexicographic order.
std::vector<std::vector<int>> increasing_tuples(int n, int m) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == m) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n - (m - static_cast<int>(cur.size())) + 1; ++v) {
            cur.push_back(v);
            self(self, v + 1);
            cur.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

}  // namespace

SearchReport brute_force_cross_sections(int n, Green relation, const SearchConfig& cfg) {
    if (relation != Green::R && relation != Green::L)
        throw domain_error("brute_force_cross_sections: only R and L are supported");
    const int guard = relation == Green::R ? cfg.max_n_r : cfg.max_n_l;
    if (!cfg.force && n > guard)
        throw guard_error("brute force refused: n=" + std::to_string(n) + " exceeds guard " +
                          std::to_string(guard) + " (use force)");
    if (n < 1 || n > 16) throw guard_error("brute force refused: n outside 1..16");

    SearchReport report;
    report.n = n;
    report.relation = relation;
    BudgetWatch watch;
    watch.budget_seconds = cfg.budget_seconds;

    // Class keys in decision order, and the representatives of each class in
    // enumeration order.
    std::vector<std::vector<Transformation>> reps;
    std::map<std::vector<int>, int> class_index;  // canonical key -> decision order
    auto key_of = [&](const Transformation& t) {
        return relation == Green::R ? t.convex_kernel().right_ends() : t.image();
    };
    if (relation == Green::R) {
        for (const auto& part : ConvexPartition::all(n)) {
            class_index.emplace(part.right_ends(), static_cast<int>(reps.size()));
            std::vector<Transformation> r;
            for (const auto& tuple : increasing_tuples(n, part.block_count())) {
                std::vector<int> im(static_cast<size_t>(n));
                for (int x = 1; x <= n; ++x)
                    im[static_cast<size_t>(x - 1)] =
                        tuple[static_cast<size_t>(part.block_index_of(x))];
                r.emplace_back(n, std::move(im));
            }
            reps.push_back(std::move(r));
        }
    } else {
        std::vector<std::vector<int>> subsets;
        for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
            std::vector<int> s;
            for (int x = 1; x <= n; ++x)
                if (mask & (1u << (x - 1))) s.push_back(x);
            subsets.push_back(std::move(s));
        }
        std::sort(subsets.begin(), subsets.end(), [](const auto& a, const auto& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        for (const auto& image : subsets) {
            class_index.emplace(image, static_cast<int>(reps.size()));
            const int m = static_cast<int>(image.size());
            std::vector<Transformation> r;
            for (const auto& part : ConvexPartition::all(n)) {
                if (part.block_count() != m) continue;
                std::vector<int> im(static_cast<size_t>(n));
                for (int x = 1; x <= n; ++x)
                    im[static_cast<size_t>(x - 1)] =
                        image[static_cast<size_t>(part.block_index_of(x))];
                r.emplace_back(n, std::move(im));
            }
            std::sort(r.begin(), r.end());
            reps.push_back(std::move(r));
        }
    }

    const int k = static_cast<int>(reps.size());
    std::vector<Transformation> chosen;
    chosen.reserve(static_cast<size_t>(k));
    // A product of fixed representatives landing in a decided class must
    // equal that class's representative.
    auto check_product = [&](const Transformation& a, const Transformation& b, int depth,
                             const Transformation& cand) {
        Transformation prod = a.compose(b);
        int cls = class_index.at(key_of(prod));
        if (cls > depth) return true;  // class not decided yet
        const Transformation& rep = cls == depth ? cand : chosen[static_cast<size_t>(cls)];
        return prod == rep;
    };
    auto consistent = [&](const Transformation& cand, int depth) {
        if (!check_product(cand, cand, depth, cand)) return false;
        for (int i = 0; i < depth; ++i) {
            if (!check_product(cand, chosen[static_cast<size_t>(i)], depth, cand)) return false;
            if (!check_product(chosen[static_cast<size_t>(i)], cand, depth, cand)) return false;
        }
        return true;
    };
    auto dfs = [&](auto&& self, int depth) -> void {
        if (depth == k) {
            report.found.emplace_back(n, relation, chosen);
            return;
        }
        for (const Transformation& cand : reps[static_cast<size_t>(depth)]) {
            ++report.nodes_explored;
            watch.tick();
            if (!consistent(cand, depth)) continue;
            chosen.push_back(cand);
            self(self, depth + 1);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0);
    report.wall_time_s = watch.elapsed();
    return report;
}

namespace {

std::string describe(const CrossSection& s) {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < s.elements.size(); ++i) {
        if (i) os << " ";
        os << s.elements[i];
    }
    os << "}";
    return os.str();
}

void compare_sets(const std::set<CrossSection>& construction, const std::set<CrossSection>& brute,
                  const char* lhs_name, TheoremReport& report) {
    for (const auto& s : construction)
        if (!brute.count(s))
            report.discrepancies.push_back(std::string(lhs_name) +
                                           " produced a set the search did not find: " + describe(s));
    for (const auto& s : brute)
        if (!construction.count(s))
            report.discrepancies.push_back("search found a set " + std::string(lhs_name) +
                                           " does not produce: " + describe(s));
}

}  // namespace

TheoremReport verify_description_theorem(int n, const SearchConfig& cfg) {
    TheoremReport report;
    report.n = n;
    auto trees = enumerate_decreasing(n);
    std::set<CrossSection> construction;
    for (const auto& t : trees) construction.insert(PhiSemigroup::build(t).as_cross_section());
    report.construction_count = static_cast<long long>(trees.size());
    if (construction.size() != trees.size())
        report.discrepancies.push_back("distinct decreasing trees produced equal semigroups");
    auto search = brute_force_cross_sections(n, Green::R, cfg);
    report.brute_count = static_cast<long long>(search.found.size());
    std::set<CrossSection> brute(search.found.begin(), search.found.end());
    compare_sets(construction, brute, "phi construction", report);
    report.ok = report.discrepancies.empty();
    return report;
}

TheoremReport verify_l_theorem(int n, const SearchConfig& cfg) {
    TheoremReport report;
    report.n = n;
    auto gammas = enumerate_respectful(n);
    std::set<CrossSection> construction;
    for (const auto& g : gammas) construction.insert(l_cross_section(g));
    report.construction_count = static_cast<long long>(gammas.size());
    if (construction.size() != gammas.size())
        report.discrepancies.push_back("distinct respectful trees produced equal L-sections");
    auto search = brute_force_cross_sections(n, Green::L, cfg);
    report.brute_count = static_cast<long long>(search.found.size());
    std::set<CrossSection> brute(search.found.begin(), search.found.end());
    compare_sets(construction, brute, "alpha construction", report);
    report.ok = report.discrepancies.empty();
    return report;
}

TheoremReport verify_dual_theorem(int n, const SearchConfig& cfg) {
    TheoremReport report;
    report.n = n;
    auto gammas = enumerate_respectful(n);
    report.construction_count = static_cast<long long>(gammas.size());
    std::set<CrossSection> duals;
    for (const auto& g : gammas) {
        CrossSection l = l_cross_section(g);
        std::set<Transformation> starred;
        for (const auto& a : l.elements) starred.insert(higgins_dual(a));
        for (int fix : {1, n + 1}) {
            // (L^Gamma)* must be Phi of the matching elementary tree minus
            // its constant.
            OrderedTree elem = elementary_from_respectful(g, fix == 1 ? 1 : n + 1);
            CrossSection phi_cs = PhiSemigroup::build(elem).as_cross_section();
            std::set<Transformation> phi_side(phi_cs.elements.begin(), phi_cs.elements.end());
            phi_side.erase(Transformation::constant(n + 1, elem.root()));
            if (phi_side != starred)
                report.discrepancies.push_back("dual identity failed for a respectful tree, root " +
                                               std::to_string(elem.root()));
            duals.insert(dual_r_cross_section(l, fix));
        }
    }
    auto search = brute_force_cross_sections(n + 1, Green::R, cfg);
    report.brute_count = static_cast<long long>(search.found.size());
    for (const auto& s : search.found) {
        auto fixed = fixed_points(s);
        bool two_fixed = fixed == std::vector<int>{1, n + 1};
        bool dual_produced = duals.count(s) != 0;
        bool elementary_tree = is_elementary(reconstruct_tree(s));
        if (two_fixed != dual_produced || two_fixed != elementary_tree)
            report.discrepancies.push_back(
                "dual equivalence failed on " + describe(s) + ": two_fixed=" +
                std::to_string(two_fixed) + " dual=" + std::to_string(dual_produced) +
                " elementary=" + std::to_string(elementary_tree));
    }
    for (const auto& s : duals)
        if (!std::count(search.found.begin(), search.found.end(), s))
            report.discrepancies.push_back("a dual section was not found by the search: " +
                                           describe(s));
    report.ok = report.discrepancies.empty();
    return report;
}

std::vector<CountRow> count_summary(int n_max, const SearchConfig& cfg) {
    std::vector<CountRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        CountRow row;
        row.n = n;
        row.on_size = count_On(n);
        row.convex_partitions = 1ll << (n - 1);
        row.decreasing_trees = static_cast<long long>(enumerate_decreasing(n).size());
        auto r_search = brute_force_cross_sections(n, Green::R, cfg);
        row.r_cross_sections = static_cast<long long>(r_search.found.size());
        row.respectful_trees = static_cast<long long>(enumerate_respectful(n).size());
        if (cfg.force || n <= cfg.max_n_l) {
            row.l_cross_sections =
                static_cast<long long>(brute_force_cross_sections(n, Green::L, cfg).found.size());
        }
        for (const auto& s : r_search.found)
            if (fixed_points(s) == std::vector<int>{1, n}) ++row.two_fixed_r;
        row.dual_prediction =
            n >= 2 ? 2ll * static_cast<long long>(enumerate_respectful(n - 1).size()) : 0;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace oncross
