#pragma once

#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "oncross/inner_tree.hpp"
#include "oncross/transformation.hpp"

namespace oncross::test {

inline Transformation tr(std::vector<int> images) {
    int n = static_cast<int>(images.size());
    return Transformation(n, std::move(images));
}

inline OrderedTree make_tree(int n, int root,
                             std::vector<std::tuple<int, int, int>> edges) {
    // edges: (label, son-or-0, daughter-or-0)
    std::vector<TreeNodeSpec> specs;
    for (auto [v, s, d] : edges) {
        TreeNodeSpec spec;
        spec.label = v;
        if (s != 0) spec.son = s;
        if (d != 0) spec.daughter = d;
        specs.push_back(spec);
    }
    return OrderedTree(n, root, specs);
}

// "( [lo,hi] left right )" with leaves as "[lo]" or "[lo,hi]"
inline std::string describe(const BinTree& t, int v) {
    const auto& nd = t.nodes[static_cast<size_t>(v)];
    std::ostringstream os;
    os << '[' << nd.lo;
    if (nd.hi != nd.lo) os << ',' << nd.hi;
    os << ']';
    if (!t.is_leaf(v))
        return "(" + os.str() + " " + describe(t, nd.left) + " " + describe(t, nd.right) + ")";
    return os.str();
}

inline std::string describe(const InnerTree& g) {
    return g.empty() ? "()" : describe(g.tree, g.tree.root);
}

}  // namespace oncross::test
