// Command-line front end: every subcommand is pure in its inputs, stdout is
// byte-deterministic for fixed argv + files (timing goes to stderr).
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "oncross/oracle.hpp"
#include "oncross/render.hpp"

using namespace oncross;

namespace {

OrderedTree load_tree(const std::string& path) { return tree_from_json(load_json_file(path)); }

int parse_fix(const std::string& text, int n) {
    if (text == "1") return 1;
    if (text == "n+1" || text == std::to_string(n + 1)) return n + 1;
    throw parse_error("--fix must be 1 or n+1");
}

struct Options {
    int n = 0;
    int n_max = 0;
    int vertex = 0;
    std::vector<std::string> trees;
    std::string partition;
    std::string l_section_file;
    std::string cross_section_file;
    std::string transformation_file;
    std::string theorem;
    std::string relation = "R";
    std::string format;
    std::string fix = "1";
    std::string order;
    bool table = false;
    bool all_trees = false;
    bool oracle = false;
    bool force = false;
    double budget = 0;
};

std::vector<int> parse_order(const std::string& text) {
    std::vector<int> order;
    std::stringstream ss(text);
    std::string token;
    while (std::getline(ss, token, ','))
        try {
            order.push_back(std::stoi(token));
        } catch (...) {
            throw parse_error("--order: '" + token + "' is not an integer");
        }
    return order;
}

SearchConfig search_config(const Options& opt) {
    SearchConfig cfg;
    cfg.force = opt.force;
    cfg.budget_seconds = opt.budget;
    return cfg;
}

int run_enumerate_trees(const Options& opt) {
    std::vector<OrderedTree> trees =
        opt.all_trees ? enumerate_ordered_trees(opt.n) : enumerate_decreasing(opt.n);
    if (opt.format == "ascii") {
        for (size_t i = 0; i < trees.size(); ++i) {
            if (i) std::cout << '\n';
            std::cout << render_diagram(trees[i]);
        }
        return 0;
    }
    json out = json::array();
    for (const auto& t : trees) out.push_back(to_json(t));
    std::cout << out.dump(2) << '\n';
    return 0;
}

int run_phi(const Options& opt) {
    OrderedTree t = load_tree(opt.trees.at(0));
    if (!opt.partition.empty()) {
        Transformation result = phi(t, partition_from_string(t.n(), opt.partition));
        if (opt.format == "text")
            std::cout << render_arrows(result);
        else
            std::cout << to_json(result).dump(2) << '\n';
        return 0;
    }
    PhiSemigroup sg = PhiSemigroup::build(t);
    if (opt.table) {
        if (opt.format == "json")
            std::cout << phi_table_json(sg).dump(2) << '\n';
        else
            std::cout << phi_table_text(sg);
        return 0;
    }
    std::cout << to_json(sg.as_cross_section()).dump(2) << '\n';
    return 0;
}

int run_theta(const Options& opt) {
    OrderedTree t = load_tree(opt.trees.at(0));
    ThetaSet theta = theta_set(t, opt.vertex);
    json out{{"vertex", theta.vertex}, {"omega", theta.omega}, {"size", theta.members.size()}};
    auto sk = skeleton(t);
    if (std::binary_search(sk.begin(), sk.end(), opt.vertex))
        out["skeleton_cardinality"] = theta_cardinality(t, opt.vertex);
    json members = json::array();
    for (const auto& m : theta.members) members.push_back(to_json(m));
    out["members"] = members;
    std::cout << out.dump(2) << '\n';
    return 0;
}

int run_verify(const Options& opt) {
    TheoremReport report;
    if (opt.theorem == "description")
        report = verify_description_theorem(opt.n, search_config(opt));
    else if (opt.theorem == "l-sections")
        report = verify_l_theorem(opt.n, search_config(opt));
    else if (opt.theorem == "dual")
        report = verify_dual_theorem(opt.n, search_config(opt));
    else
        throw parse_error("--theorem must be description, l-sections or dual");
    std::cout << to_json(report).dump(2) << '\n';
    return report.ok ? 0 : 1;
}

int run_brute_force(const Options& opt) {
    Green rel = opt.relation == "L" ? Green::L : Green::R;
    if (opt.relation != "R" && opt.relation != "L")
        throw parse_error("--relation must be R or L");
    SearchReport report = brute_force_cross_sections(opt.n, rel, search_config(opt));
    std::cerr << "search: " << report.nodes_explored << " nodes in " << report.wall_time_s
              << "s\n";
    std::cout << to_json(report).dump(2) << '\n';
    return 0;
}

int run_classify(const Options& opt) {
    if (opt.trees.size() != 2) throw parse_error("classify needs exactly two --tree files");
    OrderedTree t1 = load_tree(opt.trees[0]);
    OrderedTree t2 = load_tree(opt.trees[1]);
    IsoVerdict verdict = classify(t1, t2);
    if (opt.oracle) {
        auto witness = oracle_semigroup_iso(PhiSemigroup::build(t1).as_cross_section(),
                                            PhiSemigroup::build(t2).as_cross_section());
        if (witness.has_value() != verdict.isomorphic)
            throw domain_error("classification disagrees with the oracle; this is a bug");
        verdict.oracle_witness = witness;
    }
    std::cout << to_json(verdict).dump(2) << '\n';
    return 0;
}

int run_dual(const Options& opt) {
    CrossSection l = cross_section_from_json(load_json_file(opt.l_section_file));
    CrossSection dual = dual_r_cross_section(l, parse_fix(opt.fix, l.n));
    std::cout << to_json(dual).dump(2) << '\n';
    return 0;
}

int run_l_section(const Options& opt) {
    RespectfulTree g = respectful_from_json(load_json_file(opt.trees.at(0)));
    std::vector<int> order = opt.order.empty() ? std::vector<int>{} : parse_order(opt.order);
    std::cout << to_json(l_cross_section(g, order)).dump(2) << '\n';
    return 0;
}

int run_count(const Options& opt) {
    auto rows = count_summary(opt.n_max, search_config(opt));
    if (opt.format == "json")
        std::cout << to_json(rows).dump(2) << '\n';
    else
        std::cout << count_table_text(rows);
    return 0;
}

int run_render(const Options& opt) {
    if (!opt.trees.empty()) {
        OrderedTree t = load_tree(opt.trees.at(0));
        if (opt.format == "dot")
            std::cout << render_dot(t);
        else if (opt.format.empty() || opt.format == "ascii")
            std::cout << render_diagram(t);
        else
            throw parse_error("render --tree supports ascii or dot");
        return 0;
    }
    if (!opt.cross_section_file.empty()) {
        std::cout << render_arrows(cross_section_from_json(load_json_file(opt.cross_section_file)));
        return 0;
    }
    if (!opt.transformation_file.empty()) {
        std::cout << render_arrows(transformation_from_json(load_json_file(opt.transformation_file)));
        return 0;
    }
    throw parse_error("render needs --tree, --cross-section or --transformation");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "cross-sections of the order-preserving transformation monoid\n"
        "composition is left to right, x(ab) = (xa)b; the dual embedding reverses it"};
    app.require_subcommand(1);
    Options opt;

    auto* enumerate = app.add_subcommand("enumerate-trees", "list decreasing trees on n vertices");
    enumerate->add_option("--n", opt.n, "number of vertices")->required();
    enumerate->add_flag("--all", opt.all_trees, "include non-decreasing trees");
    enumerate->add_option("--format", opt.format, "json (default) or ascii");

    auto* phi_cmd = app.add_subcommand("phi", "transformations of a decreasing tree");
    phi_cmd->add_option("--tree", opt.trees, "tree JSON file")->required();
    phi_cmd->add_option("--partition", opt.partition, "convex partition, e.g. 1,2|3,4|5");
    phi_cmd->add_flag("--table", opt.table, "emit the full partition/transformation table");
    phi_cmd->add_option("--format", opt.format, "json or text");

    auto* theta_cmd = app.add_subcommand("theta", "idempotents with image omega(v)");
    theta_cmd->add_option("--tree", opt.trees, "tree JSON file")->required();
    theta_cmd->add_option("--vertex", opt.vertex, "vertex v")->required();

    auto* verify = app.add_subcommand("verify", "check a theorem against brute force");
    verify->add_option("--theorem", opt.theorem, "description, l-sections or dual")->required();
    verify->add_option("--n", opt.n, "instance size")->required();
    verify->add_flag("--force", opt.force, "lift the search guards");
    verify->add_option("--budget", opt.budget, "wall-clock budget in seconds");

    auto* brute = app.add_subcommand("brute-force", "exhaustive cross-section search");
    brute->add_option("--n", opt.n, "instance size")->required();
    brute->add_option("--relation", opt.relation, "R or L")->required();
    brute->add_flag("--force", opt.force, "lift the search guards");
    brute->add_option("--budget", opt.budget, "wall-clock budget in seconds");

    auto* classify_cmd = app.add_subcommand("classify", "isomorphism of two R-cross-sections");
    classify_cmd->add_option("--tree", opt.trees, "two tree JSON files")->expected(2);
    classify_cmd->add_flag("--oracle", opt.oracle, "attach a brute-force witness");

    auto* dual = app.add_subcommand("dual", "dual R-cross-section of an L-cross-section");
    dual->add_option("--l-section", opt.l_section_file, "L-cross-section JSON file")->required();
    dual->add_option("--fix", opt.fix, "fixed constant: 1 or n+1");

    auto* lsec = app.add_subcommand("l-section", "L-cross-section of a respectful tree");
    lsec->add_option("--tree", opt.trees, "respectful tree JSON file")->required();
    lsec->add_option("--order", opt.order, "linear order, e.g. 2,1,3 (default natural)");

    auto* count = app.add_subcommand("count", "per-n summary table");
    count->add_option("--n-max", opt.n_max, "largest n")->required();
    count->add_flag("--force", opt.force, "lift the search guards");
    count->add_option("--budget", opt.budget, "wall-clock budget in seconds");
    count->add_option("--format", opt.format, "text (default) or json");

    auto* render = app.add_subcommand("render", "text renderings");
    render->add_option("--tree", opt.trees, "tree JSON file");
    render->add_option("--cross-section", opt.cross_section_file, "cross-section JSON file");
    render->add_option("--transformation", opt.transformation_file, "transformation JSON file");
    render->add_option("--format", opt.format, "ascii, dot or arrows");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (enumerate->parsed()) return run_enumerate_trees(opt);
        if (phi_cmd->parsed()) return run_phi(opt);
        if (theta_cmd->parsed()) return run_theta(opt);
        if (verify->parsed()) return run_verify(opt);
        if (brute->parsed()) return run_brute_force(opt);
        if (classify_cmd->parsed()) return run_classify(opt);
        if (dual->parsed()) return run_dual(opt);
        if (lsec->parsed()) return run_l_section(opt);
        if (count->parsed()) return run_count(opt);
        if (render->parsed()) return run_render(opt);
    } catch (const parse_error& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return 2;
    } catch (const guard_error& e) {
        std::cerr << "guard: " << e.what() << '\n';
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
