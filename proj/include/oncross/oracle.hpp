#pragma once

/// Independent ground truth: exhaustive backtracking over class
/// representatives to find every R- or L-cross-section of O_n, plus the
/// set-equality checks behind the description theorems and the dual bridge.

#include <string>
#include <vector>

#include "oncross/cross_section.hpp"

namespace oncross {

struct SearchConfig {
    int max_n_r = 5;
    int max_n_l = 4;
    bool force = false;          // lift the n guards
    double budget_seconds = 0;   // wall-clock cap when > 0
};

struct SearchReport {
    int n = 0;
    Green relation = Green::R;
    std::vector<CrossSection> found;
    long long nodes_explored = 0;
    double wall_time_s = 0;
};

// Classes are ordered by ascending block count (R: convex partitions) or
// ascending image size (L: nonempty subsets), then lexicographically;
// representatives are tried in enumeration order.  Each newly fixed
// representative is multiplied against all fixed ones in both orders, and a
// product landing in a decided class must equal that class's representative.
SearchReport brute_force_cross_sections(int n, Green relation, const SearchConfig& cfg = {});

struct TheoremReport {
    int n = 0;
    bool ok = false;
    long long construction_count = 0;  // trees-side count
    long long brute_count = 0;
    std::vector<std::string> discrepancies;
};

// {Phi(t) : t decreasing on n} equals the brute-forced R-cross-sections.
TheoremReport verify_description_theorem(int n, const SearchConfig& cfg = {});

// {L^Gamma : Gamma respectful with n leaves, natural marking} equals the
// brute-forced L-cross-sections.
TheoremReport verify_l_theorem(int n, const SearchConfig& cfg = {});

// Dual bridge at L-side size n: (L^Gamma)* = Phi(elementary tree) minus the
// constant for both root choices, and over all brute-forced R-cross-sections
// of O_{n+1}: two fixed points <=> dual-produced <=> elementary
// reconstructed tree.
TheoremReport verify_dual_theorem(int n, const SearchConfig& cfg = {});

struct CountRow {
    int n = 0;
    long long on_size = 0;
    long long convex_partitions = 0;
    long long decreasing_trees = 0;
    long long r_cross_sections = 0;
    long long respectful_trees = 0;   // with n leaves
    long long l_cross_sections = -1;  // -1 when skipped by guard
    long long two_fixed_r = 0;
    long long dual_prediction = 0;    // 2 * respectful trees with n-1 leaves
};

std::vector<CountRow> count_summary(int n_max, const SearchConfig& cfg = {});

}  // namespace oncross
