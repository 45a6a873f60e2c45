#include "oncross/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace oncross {

namespace {

[[noreturn]] void bad(const std::string& what) { throw parse_error(what); }

int get_int(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer()) bad(std::string("missing integer field '") + key + "'");
    return j[key].get<int>();
}

}  // namespace

json to_json(const Transformation& t) {
    return json{{"n", t.n()}, {"images", t.images()}};
}

Transformation transformation_from_json(const json& j) {
    int n = get_int(j, "n");
    if (!j.contains("images") || !j["images"].is_array()) bad("transformation: missing images array");
    std::vector<int> images;
    for (const auto& v : j["images"]) {
        if (!v.is_number_integer()) bad("transformation: images must be integers");
        images.push_back(v.get<int>());
    }
    try {
        return Transformation(n, std::move(images));
    } catch (const domain_error& e) {
        bad(std::string("transformation: ") + e.what());
    }
}

json to_json(const CrossSection& s) {
    json elems = json::array();
    for (const auto& e : s.elements) elems.push_back(to_json(e));
    return json{{"n", s.n}, {"relation", s.relation == Green::R ? "R" : "L"}, {"elements", elems}};
}

CrossSection cross_section_from_json(const json& j) {
    int n = get_int(j, "n");
    if (!j.contains("relation") || !j["relation"].is_string()) bad("cross-section: missing relation");
    std::string rel = j["relation"].get<std::string>();
    if (rel != "R" && rel != "L") bad("cross-section: relation must be R or L");
    if (!j.contains("elements") || !j["elements"].is_array()) bad("cross-section: missing elements");
    std::vector<Transformation> elems;
    for (const auto& e : j["elements"]) elems.push_back(transformation_from_json(e));
    try {
        return CrossSection(n, rel == "R" ? Green::R : Green::L, std::move(elems));
    } catch (const domain_error& e) {
        bad(std::string("cross-section: ") + e.what());
    }
}

json to_json(const OrderedTree& t) {
    json nodes = json::object();
    for (int v = 1; v <= t.n(); ++v) {
        json node = json::object();
        if (t.son(v) != 0) node["son"] = t.son(v);
        if (t.daughter(v) != 0) node["daughter"] = t.daughter(v);
        if (!node.empty()) nodes[std::to_string(v)] = node;
    }
    return json{{"n", t.n()}, {"root", t.root()}, {"nodes", nodes}};
}

OrderedTree tree_from_json(const json& j) {
    int n = get_int(j, "n");
    int root = get_int(j, "root");
    std::vector<TreeNodeSpec> specs;
    if (j.contains("nodes")) {
        if (!j["nodes"].is_object()) bad("tree: nodes must be an object");
        for (const auto& [key, node] : j["nodes"].items()) {
            TreeNodeSpec spec;
            try {
                spec.label = std::stoi(key);
            } catch (...) {
                bad("tree: node key is not an integer label");
            }
            if (node.contains("son")) spec.son = node["son"].get<int>();
            if (node.contains("daughter")) spec.daughter = node["daughter"].get<int>();
            specs.push_back(spec);
        }
    }
    try {
        return OrderedTree(n, root, specs);
    } catch (const domain_error& e) {
        bad(std::string("tree: ") + e.what());
    }
}

json to_json(const RespectfulTree& g) {
    // Pre-order ids starting at 1.
    const BinTree& t = g.tree;
    std::vector<int> id(static_cast<size_t>(t.size()), 0);
    int next = 1;
    auto number = [&](auto&& self, int v) -> void {
        id[static_cast<size_t>(v)] = next++;
        const auto& nd = t.nodes[static_cast<size_t>(v)];
        if (nd.left >= 0) self(self, nd.left);
        if (nd.right >= 0) self(self, nd.right);
    };
    number(number, t.root);
    json nodes = json::object();
    for (int v = 0; v < t.size(); ++v) {
        const auto& nd = t.nodes[static_cast<size_t>(v)];
        json node = json::object();
        if (nd.left >= 0) node["son"] = id[static_cast<size_t>(nd.left)];
        if (nd.right >= 0) node["daughter"] = id[static_cast<size_t>(nd.right)];
        if (g.marked()) node["marking"] = json::array({nd.lo, nd.hi});
        nodes[std::to_string(id[static_cast<size_t>(v)])] = node;
    }
    json out{{"leaves", g.leaves()}, {"root", id[static_cast<size_t>(t.root)]}, {"nodes", nodes}};
    if (g.marked()) out["order"] = g.order;
    return out;
}

RespectfulTree respectful_from_json(const json& j) {
    if (!j.contains("nodes") || !j["nodes"].is_object()) bad("respectful tree: missing nodes");
    int root_id = get_int(j, "root");
    std::map<int, std::pair<int, int>> children;  // id -> (son id, daughter id); 0 = none
    for (const auto& [key, node] : j["nodes"].items()) {
        int id = 0;
        try {
            id = std::stoi(key);
        } catch (...) {
            bad("respectful tree: node key is not an integer id");
        }
        int son = node.contains("son") ? node["son"].get<int>() : 0;
        int dau = node.contains("daughter") ? node["daughter"].get<int>() : 0;
        children[id] = {son, dau};
    }
    BinTree t;
    auto build = [&](auto&& self, int id) -> int {
        auto it = children.find(id);
        if (it == children.end()) bad("respectful tree: node id " + std::to_string(id) + " missing");
        auto [son, dau] = it->second;
        if ((son == 0) != (dau == 0)) bad("respectful tree: tree is not full");
        BinTree::Node nd;
        if (son != 0) {
            nd.left = self(self, son);
            nd.right = self(self, dau);
        }
        return t.add(nd);
    };
    t.root = build(build, root_id);
    if (t.size() != static_cast<int>(children.size()))
        bad("respectful tree: unreachable nodes present");
    RespectfulTree g = respectful_from_shape(t);
    if (j.contains("order")) {
        std::vector<int> order;
        for (const auto& v : j["order"]) order.push_back(v.get<int>());
        g = faithful_marking(g, std::move(order));
    } else if (get_int(j, "leaves") != g.leaves()) {
        bad("respectful tree: leaf count mismatch");
    }
    return g;
}

json to_json(const SearchReport& r) {
    json sections = json::array();
    for (const auto& s : r.found) sections.push_back(to_json(s));
    return json{{"n", r.n},
                {"relation", r.relation == Green::R ? "R" : "L"},
                {"count", r.found.size()},
                {"nodes_explored", r.nodes_explored},
                {"cross_sections", sections}};
}

json to_json(const TheoremReport& r) {
    return json{{"n", r.n},
                {"ok", r.ok},
                {"construction_count", r.construction_count},
                {"brute_count", r.brute_count},
                {"discrepancies", r.discrepancies}};
}

namespace {

std::string orientation_name(Orientation o) {
    return o == Orientation::iso ? "iso" : "anti";
}

std::string verdict_name(SimilarityVerdict v) {
    switch (v) {
        case SimilarityVerdict::none: return "none";
        case SimilarityVerdict::iso: return "iso";
        case SimilarityVerdict::anti: return "anti";
        case SimilarityVerdict::both: return "both";
    }
    return "none";
}

}  // namespace

json to_json(const IsoVerdict& v) {
    json out{{"isomorphic", v.isomorphic}};
    out["orientation"] =
        v.isomorphic && v.component_orientation ? orientation_name(*v.component_orientation) : "none";
    if (v.skeleton_alignment) out["skeleton_alignment"] = orientation_name(*v.skeleton_alignment);
    json comps = json::array();
    for (const auto& c : v.components)
        comps.push_back(json{{"component", c.anchor1},
                             {"paired_with", c.anchor2},
                             {"similarity", verdict_name(c.similarity)}});
    out["components"] = comps;
    if (v.oracle_witness) out["oracle_witness"] = *v.oracle_witness;
    return out;
}

json to_json(const std::vector<CountRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        json row{{"n", r.n},
                 {"on_size", r.on_size},
                 {"convex_partitions", r.convex_partitions},
                 {"decreasing_trees", r.decreasing_trees},
                 {"r_cross_sections", r.r_cross_sections},
                 {"respectful_trees", r.respectful_trees},
                 {"two_fixed_r", r.two_fixed_r},
                 {"dual_prediction", r.dual_prediction}};
        if (r.l_cross_sections >= 0) row["l_cross_sections"] = r.l_cross_sections;
        out.push_back(row);
    }
    return out;
}

ConvexPartition partition_from_string(int n, const std::string& text) {
    std::vector<int> right_ends;
    int expected = 1;
    std::stringstream blocks(text);
    std::string block;
    while (std::getline(blocks, block, '|')) {
        std::stringstream points(block);
        std::string token;
        int last = 0;
        while (std::getline(points, token, ',')) {
            int value = 0;
            try {
                value = std::stoi(token);
            } catch (...) {
                bad("partition: '" + token + "' is not an integer");
            }
            if (value != expected)
                bad("partition: expected point " + std::to_string(expected) + ", got " + token);
            last = value;
            ++expected;
        }
        if (last == 0) bad("partition: empty block");
        right_ends.push_back(last);
    }
    if (expected != n + 1) bad("partition: does not cover 1..n");
    try {
        return ConvexPartition(n, std::move(right_ends));
    } catch (const domain_error& e) {
        bad(std::string("partition: ") + e.what());
    }
}

std::string partition_to_string(const ConvexPartition& p) {
    std::string out;
    for (int i = 0; i < p.block_count(); ++i) {
        if (i) out += '|';
        auto [lo, hi] = p.block(i);
        for (int x = lo; x <= hi; ++x) {
            if (x > lo) out += ',';
            out += std::to_string(x);
        }
    }
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) bad("cannot open file: " + path);
    json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        bad("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

}  // namespace oncross
